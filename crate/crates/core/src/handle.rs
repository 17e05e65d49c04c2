//! Dehornoy handle reduction for the classical braid word problem.
//!
//! A σ_i-handle is a factor `σ_i^e u σ_i^-e` where `u` contains neither
//! σ_i^{±1} nor σ_{i-1}^{±1}. Reducing it deletes the two ends and replaces
//! every σ_{i+1}^d in `u` by `σ_{i+1}^-e σ_i^d σ_{i+1}^e`. The handle
//! selected each step is the one whose right end comes first; such a
//! handle contains no other handle, so it is permitted and reduction
//! terminates. The final word is empty iff the input braid is trivial.

use crate::error::{Error, Result};
use crate::word::{Flavor, Letter, Sign, Word};

/// Default cap on the number of handle reductions.
pub const DEFAULT_STEP_CAP: usize = 5_000_000;

/// Signed classical letter: `+i` is σ_i, `-i` is σ_i^-1.
type Sl = i32;

/// Outcome of a full reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Handle-free word equivalent to the input.
    pub word: Word,
    pub steps: usize,
}

/// Reduces `w` until no handle remains.
pub fn handle_reduce(w: &Word, step_cap: usize) -> Result<Reduction> {
    let Flavor::Classical(n) = w.flavor() else {
        return Err(Error::NotClassical(w.flavor()));
    };
    let mut letters: Vec<Sl> = w
        .letters()
        .iter()
        .map(|l| l.index() as Sl * l.sign().as_i64() as Sl)
        .collect();
    let mut steps = 0;
    let mut from = 0;
    while let Some((l, r)) = find_handle(&letters, from) {
        if steps == step_cap {
            return Err(Error::HandleStepCap(step_cap));
        }
        steps += 1;
        let i = letters[l].abs();
        let e = letters[l].signum();
        let mut replacement = Vec::with_capacity(r - l);
        for &x in &letters[l + 1..r] {
            if x.abs() == i + 1 {
                replacement.extend([-e * (i + 1), x.signum() * i, e * (i + 1)]);
            } else {
                replacement.push(x);
            }
        }
        letters.splice(l..=r, replacement);
        // Handles ending before `l` would have been found already.
        from = l;
    }
    let out = letters
        .into_iter()
        .map(|x| Letter::sigma(x.unsigned_abs() as usize, if x > 0 { Sign::Pos } else { Sign::Neg }))
        .collect();
    Ok(Reduction { word: Word::from_trusted(Flavor::Classical(n), out), steps })
}

/// Leftmost-ending handle whose right end is at or after `from`.
fn find_handle(letters: &[Sl], from: usize) -> Option<(usize, usize)> {
    for r in from.max(1)..letters.len() {
        let i = letters[r].abs();
        for l in (0..r).rev() {
            let j = letters[l].abs();
            if j == i {
                if letters[l] == -letters[r] {
                    return Some((l, r));
                }
                break;
            }
            if j + 1 == i {
                break;
            }
        }
    }
    None
}

/// Whether a classical word represents the identity braid.
pub fn is_trivial_braid(w: &Word) -> Result<bool> {
    is_trivial_braid_capped(w, DEFAULT_STEP_CAP)
}

pub fn is_trivial_braid_capped(w: &Word, step_cap: usize) -> Result<bool> {
    Ok(handle_reduce(w, step_cap)?.word.is_empty())
}
