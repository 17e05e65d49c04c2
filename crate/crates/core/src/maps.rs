//! Word-level maps of the composite
//! `PB_{n+1} --p_k--> CPB_n --f_d--> VCB_n --ρ--> GL_n`.
//!
//! `p_k` substitutes each letter σ_i^ε of a pure classical word on `n+1`
//! strands by
//!
//! ```text
//! σ_{k-i-1}^ε   if i ∉ {k-1, k}   (only when 1 <= k-i-1 <= n-1)
//! ζ^-1          if i = k-1, ε = +1
//! Δ_c           if i = k-1, ε = -1
//! Δ_c^-1        if i = k,   ε = +1
//! ζ             if i = k,   ε = -1
//! ```
//!
//! with `Δ_c = σ_1 ⋯ σ_{n-1}`. `f_d` fixes σ letters and sends
//! `ζ ↦ ζ (Δ_v ζ)^{d-1}` with `Δ_v = τ_1 ⋯ τ_{n-1}`; ζ^-1 goes to the formal
//! inverse of that word.
//!
//! Both substitutions are monoid maps on words. The images of σ_{k-1}^{±1}
//! and σ_k^{±1} are not inverse to each other under ρ, so the composite is
//! multiplicative only away from those letters; [`cancellation_defect`]
//! exposes the discrepancy.

use crate::error::{Error, Result};
use crate::laurent::{Coeff, PolyMatrix};
use crate::rep::rho_word;
use crate::word::{Flavor, Kind, Letter, Sign, Word};

fn check_k(k: usize, n: usize) -> Result<()> {
    if k < 1 || k > n + 1 {
        return Err(Error::StrandOutOfRange { k, max: n + 1 });
    }
    Ok(())
}

/// Codomain strand count `n` for a classical word on `n + 1` strands.
fn codomain_strands(w: &Word) -> Result<usize> {
    match w.flavor() {
        Flavor::Classical(m) if m >= 3 => Ok(m - 1),
        Flavor::Classical(m) => Err(Error::TooFewStrands(m)),
        other => Err(Error::NotClassical(other)),
    }
}

fn delta_c_letters(n: usize, sign: Sign) -> Vec<Letter> {
    let forward = (1..n).map(|i| Letter::sigma(i, Sign::Pos));
    match sign {
        Sign::Pos => forward.collect(),
        Sign::Neg => forward.rev().map(|l| l.inverse()).collect(),
    }
}

/// Image of one classical letter under `p_k` into `n` strands.
/// `position` only labels the error.
pub fn pk_letter_image(
    letter: &Letter,
    position: usize,
    k: usize,
    n: usize,
) -> Result<Vec<Letter>> {
    let i = letter.index();
    let unsupported = || Error::UnsupportedIndex { position, letter: *letter, k, n };
    if letter.kind() != Kind::Sigma {
        return Err(unsupported());
    }
    let image = match (i, letter.sign()) {
        (i, Sign::Pos) if i + 1 == k => vec![Letter::zeta(Sign::Neg)],
        (i, Sign::Neg) if i + 1 == k => delta_c_letters(n, Sign::Pos),
        (i, Sign::Pos) if i == k => delta_c_letters(n, Sign::Neg),
        (i, Sign::Neg) if i == k => vec![Letter::zeta(Sign::Pos)],
        (i, sign) => {
            let target = k as i64 - i as i64 - 1;
            if target < 1 || target > n as i64 - 1 {
                return Err(unsupported());
            }
            vec![Letter::sigma(target as usize, sign)]
        }
    };
    Ok(image)
}

/// Whether `letter` has an image under `p_k` into `n` strands.
pub fn pk_supports(letter: &Letter, k: usize, n: usize) -> bool {
    pk_letter_image(letter, 0, k, n).is_ok()
}

/// Letter-wise `p_k` without the purity precondition.
pub fn project_letters(w: &Word, k: usize) -> Result<Word> {
    let n = codomain_strands(w)?;
    check_k(k, n)?;
    let mut out = Vec::with_capacity(w.len());
    for (position, l) in w.letters().iter().enumerate() {
        out.extend(pk_letter_image(l, position, k, n)?);
    }
    Ok(Word::from_trusted(Flavor::Cylindrical(n), out))
}

/// `p_k : PB_{n+1} → CPB_n`. The input must be a pure classical word on
/// `n + 1 >= 3` strands and `1 <= k <= n + 1`.
pub fn project_pk(w: &Word, k: usize) -> Result<Word> {
    let n = codomain_strands(w)?;
    check_k(k, n)?;
    if !w.is_pure() {
        return Err(Error::NotPure);
    }
    project_letters(w, k)
}

/// Image of ζ under `f_d` in `n` strands.
fn zeta_image(n: usize, d: usize) -> Vec<Letter> {
    let mut out = vec![Letter::zeta(Sign::Pos)];
    for _ in 1..d {
        out.extend((1..n).map(|i| Letter::tau(i, Sign::Pos)));
        out.push(Letter::zeta(Sign::Pos));
    }
    out
}

/// `f_d : CPB_n → VCB_n` for `d >= 1`.
pub fn stabilize_fd(w: &Word, d: i64) -> Result<Word> {
    let Flavor::Cylindrical(n) = w.flavor() else {
        return Err(Error::NotCylindrical(w.flavor()));
    };
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let zeta = zeta_image(n, d as usize);
    let zeta_inv: Vec<Letter> = zeta.iter().rev().map(Letter::inverse).collect();
    let mut out = Vec::with_capacity(w.len());
    for l in w.letters() {
        match (l.kind(), l.sign()) {
            (Kind::Zeta, Sign::Pos) => out.extend_from_slice(&zeta),
            (Kind::Zeta, Sign::Neg) => out.extend_from_slice(&zeta_inv),
            _ => out.push(*l),
        }
    }
    Ok(Word::from_trusted(Flavor::VirtualCylindrical(n), out))
}

/// The composite `ρ ∘ f_d ∘ p_k` of a pure word on `n + 1` strands.
pub fn mn_map<C: Coeff>(w: &Word, k: usize, d: i64) -> Result<PolyMatrix<C>> {
    Ok(rho_word(&stabilize_fd(&project_pk(w, k)?, d)?))
}

/// ρ∘f_d of the letter-wise images of σ_i followed by σ_i^-1. The identity
/// means the substitution respects the cancellation σ_i σ_i^-1 = e.
pub fn cancellation_defect<C: Coeff>(i: usize, k: usize, n: usize, d: i64) -> Result<PolyMatrix<C>> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    check_k(k, n)?;
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange {
            letter: Letter::sigma(i.max(1), Sign::Pos),
            flavor: Flavor::Classical(n + 1),
        });
    }
    let pair = Word::new(
        Flavor::Classical(n + 1),
        vec![Letter::sigma(i, Sign::Pos), Letter::sigma(i, Sign::Neg)],
    )?;
    Ok(rho_word(&stabilize_fd(&project_letters(&pair, k)?, d)?))
}
