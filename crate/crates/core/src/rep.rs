//! The matrix representation ρ of virtual-cylindrical braids and its
//! restriction ψ to classical braids (the unreduced Burau representation).
//!
//! Generator images, with the nontrivial 2×2 block at rows/columns
//! `k, k+1`:
//!
//! ```text
//! σ_k    [[1-t, t], [1, 0]]        σ_k^-1  [[0, 1], [t^-1, 1-t^-1]]
//! τ_k    [[0, s], [s^-1, 0]]       τ_k^-1  same as τ_k
//! ζ      I_{n-1} in the top-right block, 1 in the bottom-left corner
//! ζ^-1   transpose of ζ
//! ```
//!
//! [`rho_word`] multiplies on the right one letter at a time by column
//! operations instead of forming each generator matrix; the generic
//! product of [`rho_letter`] images gives the same result and the tests
//! check that.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{Coeff, LaurentPoly, PolyMatrix};
use crate::word::{Flavor, Kind, Letter, Sign, Word};

fn check_letter(letter: &Letter, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::TooFewStrands(0));
    }
    if letter.kind() != Kind::Zeta && (letter.index() < 1 || letter.index() >= n) {
        return Err(Error::IndexOutOfRange {
            letter: *letter,
            flavor: Flavor::VirtualCylindrical(n),
        });
    }
    Ok(())
}

/// The `n × n` image of a single letter.
pub fn rho_letter<C: Coeff>(letter: &Letter, n: usize) -> Result<PolyMatrix<C>> {
    check_letter(letter, n)?;
    let mut m = PolyMatrix::identity(n);
    apply_letter(&mut m, letter);
    Ok(m)
}

/// `m ← m · ρ(letter)`; the letter must already be legal for `m.dim()`.
fn apply_letter<C: Coeff>(m: &mut PolyMatrix<C>, letter: &Letter) {
    let n = m.dim();
    let one = LaurentPoly::<C>::one();
    match letter.kind() {
        Kind::Sigma | Kind::Tau => {
            let (a, b) = (letter.index() - 1, letter.index());
            for row in 0..n {
                let x = m.get(row, a).clone();
                let y = m.get(row, b).clone();
                let (new_a, new_b) = match (letter.kind(), letter.sign()) {
                    (Kind::Sigma, Sign::Pos) => {
                        (&(&x * &(&one - &LaurentPoly::t())) + &y, &x * &LaurentPoly::t())
                    }
                    (Kind::Sigma, Sign::Neg) => {
                        (&y * &LaurentPoly::t_inv(), &x + &(&y * &(&one - &LaurentPoly::t_inv())))
                    }
                    _ => (&y * &LaurentPoly::s_inv(), &x * &LaurentPoly::s()),
                };
                m.set(row, a, new_a);
                m.set(row, b, new_b);
            }
        }
        Kind::Zeta => {
            // ζ moves column j-1 to column j (cyclically); ζ^-1 the reverse.
            for row in 0..n {
                let mut cells: Vec<LaurentPoly<C>> =
                    (0..n).map(|col| m.get(row, col).clone()).collect();
                match letter.sign() {
                    Sign::Pos => cells.rotate_right(1),
                    Sign::Neg => cells.rotate_left(1),
                }
                for (col, cell) in cells.into_iter().enumerate() {
                    m.set(row, col, cell);
                }
            }
        }
    }
}

/// Left-to-right product of the letter images of `w`, of dimension
/// `w.strands()`. Any flavor is accepted.
pub fn rho_word<C: Coeff>(w: &Word) -> PolyMatrix<C> {
    rho_letters(w.letters(), w.strands())
}

pub(crate) fn rho_letters<C: Coeff>(letters: &[Letter], n: usize) -> PolyMatrix<C> {
    let mut m = PolyMatrix::identity(n);
    for l in letters {
        apply_letter(&mut m, l);
    }
    m
}

/// [`rho_word`] evaluated as a parallel reduction over chunks of
/// `chunk` letters. The grouping is associative, so the result is
/// identical to the sequential product.
pub fn rho_word_par<C: Coeff>(w: &Word, chunk: usize) -> PolyMatrix<C> {
    let n = w.strands();
    w.letters()
        .par_chunks(chunk.max(1))
        .map(|c| rho_letters::<C>(c, n))
        .reduce(
            || PolyMatrix::identity(n),
            |a, b| a.product(&b).expect("chunks share the dimension"),
        )
}

/// The unreduced Burau matrix of a classical word.
pub fn burau<C: Coeff>(w: &Word) -> Result<PolyMatrix<C>> {
    match w.flavor() {
        Flavor::Classical(_) => Ok(rho_word(w)),
        other => Err(Error::NotClassical(other)),
    }
}
