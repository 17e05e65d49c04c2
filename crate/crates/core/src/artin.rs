//! Artin's action of B_n on the free group F_n.
//!
//! σ_i acts by `x_i ↦ x_i x_{i+1} x_i^-1`, `x_{i+1} ↦ x_i`, fixing the other
//! generators. The action is faithful, so a classical word is trivial iff
//! the automorphism it induces is the identity. Images can grow
//! exponentially with word length, hence the per-image letter budget.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Flavor, Sign, Word};

/// Default cap on the length of any single image.
pub const DEFAULT_IMAGE_BUDGET: usize = 1 << 16;

/// A freely reduced word in `x_1..x_n`; `+j` is `x_j`, `-j` is `x_j^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(j: usize) -> Self {
        FreeWord(vec![j as i32])
    }

    /// Reduces `letters` freely.
    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut w = FreeWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    fn extend(&mut self, other: &FreeWord) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    fn product(parts: &[&FreeWord]) -> FreeWord {
        let mut out = FreeWord::default();
        for p in parts {
            out.extend(p);
        }
        out
    }
}

impl fmt::Display for FreeWord {
    /// `x1 x2 X1`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("X{}", -l) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An endomorphism of F_n given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAut {
    images: Vec<FreeWord>,
}

impl FreeAut {
    pub fn identity(n: usize) -> Self {
        FreeAut { images: (1..=n).map(FreeWord::generator).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `x_j` (1-based).
    pub fn image(&self, j: usize) -> &FreeWord {
        &self.images[j - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, w)| w.0 == [j as i32 + 1])
    }

    /// Image strings in the `x1`/`X1` convention.
    pub fn image_strings(&self) -> Vec<String> {
        self.images.iter().map(ToString::to_string).collect()
    }

    /// Composes with σ_i^sign on the right.
    fn apply(&mut self, i: usize, sign: Sign) {
        let (a, b) = (&self.images[i - 1], &self.images[i]);
        let (new_a, new_b) = match sign {
            Sign::Pos => (FreeWord::product(&[a, b, &a.inverse()]), a.clone()),
            Sign::Neg => (b.clone(), FreeWord::product(&[&b.inverse(), a, b])),
        };
        self.images[i - 1] = new_a;
        self.images[i] = new_b;
    }
}

/// The automorphism induced by a classical word, failing with
/// [`Error::ImageBudget`] once any image exceeds `budget` letters.
pub fn artin_apply(w: &Word, budget: usize) -> Result<FreeAut> {
    let Flavor::Classical(n) = w.flavor() else {
        return Err(Error::NotClassical(w.flavor()));
    };
    let mut aut = FreeAut::identity(n);
    for l in w.letters() {
        aut.apply(l.index(), l.sign());
        let i = l.index();
        if aut.images[i - 1].len() > budget || aut.images[i].len() > budget {
            return Err(Error::ImageBudget(budget));
        }
    }
    Ok(aut)
}

/// Triviality via the Artin action.
pub fn is_trivial_by_artin(w: &Word, budget: usize) -> Result<bool> {
    Ok(artin_apply(w, budget)?.is_identity())
}
