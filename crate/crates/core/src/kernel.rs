//! Kernel witnesses for the composite map and an exhaustive search for
//! short ones.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::handle::is_trivial_braid;
use crate::maps::{mn_map, pk_letter_image, pk_supports, project_pk, stabilize_fd};
use crate::rep::{burau, rho_word};
use crate::word::{Flavor, Letter, Permutation, Sign, Word};
use crate::Matrix;

/// The braids ψ_1, ψ_2 ∈ B_5. The Burau kernel element is built from
/// them as `[γ σ_4 γ^-1, σ_4 σ_3 σ_2 σ_1^2 σ_2 σ_3 σ_4]` with `γ = ψ_2 ψ_1^-1`,
/// which is conjugate (by ψ_2) to the two-conjugator form
/// `[ψ_1^-1 σ_4 ψ_1, ψ_2^-1 σ_4 σ_3 σ_2 σ_1^2 σ_2 σ_3 σ_4 ψ_2]`.
const PSI_1: &str = "s3^-1 s2 s1^2 s2 s4^3 s3 s2";
const PSI_2: &str = "s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5";
const LONG_FACTOR: &str = "s4 s3 s2 s1^2 s2 s3 s4";

/// The freely reduced commutator word, before any oracle check.
pub fn bigelow_alpha_unchecked() -> Word {
    let f = Flavor::Classical(5);
    let parse = |t| Word::parse(t, f).expect("embedded word parses");
    let gamma = parse(PSI_2).concat(&parse(PSI_1).inverse()).expect("same flavor");
    let conj = gamma
        .concat(&parse("s4"))
        .and_then(|w| w.concat(&gamma.inverse()))
        .expect("same flavor");
    Word::commutator(&conj, &parse(LONG_FACTOR)).expect("same flavor").free_reduce()
}

/// A nontrivial pure braid in B_5 with trivial Burau image.
///
/// The three properties are re-checked (once per process) before the word
/// is handed out; a failed check is [`Error::InvalidWitness`].
pub fn bigelow_alpha() -> Result<Word> {
    static CHECKED: OnceLock<Result<Word>> = OnceLock::new();
    CHECKED
        .get_or_init(|| {
            let alpha = bigelow_alpha_unchecked();
            if !alpha.is_pure() {
                return Err(Error::InvalidWitness("not a pure braid"));
            }
            if !burau::<num_bigint::BigInt>(&alpha)?.is_identity() {
                return Err(Error::InvalidWitness("Burau image is not the identity"));
            }
            if is_trivial_braid(&alpha)? {
                return Err(Error::InvalidWitness("word is the trivial braid"));
            }
            Ok(alpha)
        })
        .clone()
}

/// Relabels σ_i ↦ σ_{5-i} and moves the word from B_5 into B_6, so that
/// `p_6` of the result is the input.
pub fn lift_witness(alpha: &Word) -> Result<Word> {
    if alpha.flavor() != Flavor::Classical(5) {
        return Err(Error::FlavorMismatch { left: alpha.flavor(), right: Flavor::Classical(5) });
    }
    let letters = alpha.letters().iter().map(|l| Letter::sigma(5 - l.index(), l.sign())).collect();
    Word::new(Flavor::Classical(6), letters)
}

/// Map parameters recorded in a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Params {
    Lifted { k: usize, d: i64 },
    SigmaPower { m: usize, k: usize, d: i64 },
}

/// Outcome of one end-to-end kernel check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub witness: Word,
    pub witness_nontrivial: bool,
    pub params: Params,
    /// `p_k` of the witness.
    pub projection: Word,
    pub image: Matrix,
    pub image_is_identity: bool,
    pub passed: bool,
}

impl VerificationReport {
    fn new(witness: Word, params: Params, projection: Word, image: Matrix) -> Result<Self> {
        let witness_nontrivial = !is_trivial_braid(&witness)?;
        let image_is_identity = image.is_identity();
        Ok(VerificationReport {
            witness,
            witness_nontrivial,
            params,
            projection,
            image,
            image_is_identity,
            passed: witness_nontrivial && image_is_identity,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "witness": self.witness.to_string(),
            "params": self.params,
            "image_is_identity": self.image_is_identity,
            "witness_nontrivial": self.witness_nontrivial,
            "passed": self.passed,
        })
    }
}

/// Lifted Burau kernel element pushed through `ρ ∘ f_d ∘ p_6`.
pub fn verify_theorem1(d: i64) -> Result<VerificationReport> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let witness = lift_witness(&bigelow_alpha()?)?;
    let projection = project_pk(&witness, 6)?;
    let image = rho_word(&stabilize_fd(&projection, d)?);
    VerificationReport::new(witness, Params::Lifted { k: 6, d }, projection, image)
}

/// `σ_k^{-2m}` on `2m + 1` strands pushed through `ρ ∘ f_1 ∘ p_k`.
pub fn verify_theorem2(m: usize, k: usize) -> Result<VerificationReport> {
    if m < 1 {
        return Err(Error::InvalidParameter { name: "m", value: m as i64 });
    }
    let n = 2 * m;
    if k < 1 || k > n {
        return Err(Error::StrandOutOfRange { k, max: n });
    }
    let witness = Word::new(Flavor::Classical(n + 1), vec![Letter::sigma(k, Sign::Neg); 2 * m])?;
    let projection = project_pk(&witness, k)?;
    let image = rho_word(&stabilize_fd(&projection, 1)?);
    VerificationReport::new(witness, Params::SigmaPower { m, k, d: 1 }, projection, image)
}

/// One kernel element found by [`search_kernel`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub word: Word,
    /// Independent re-evaluation through [`mn_map`] gave the identity.
    pub verified: bool,
    pub freely_trivial: bool,
}

pub const MAX_SEARCH_LEN: usize = 12;
pub const MAX_SEARCH_ALPHABET: usize = 12;
/// Cap on the number of freely reduced candidates visited.
pub const MAX_SEARCH_CANDIDATES: u128 = 50_000_000;

/// The σ_i^{±1} letters on `n + 1` strands with an image under `p_k`,
/// in letter order.
pub fn search_alphabet(n: usize, k: usize) -> Vec<Letter> {
    (1..=n)
        .flat_map(|i| [Letter::sigma(i, Sign::Pos), Letter::sigma(i, Sign::Neg)])
        .filter(|l| pk_supports(l, k, n))
        .collect()
}

fn candidate_count(alphabet: usize, max_len: usize) -> u128 {
    let a = alphabet as u128;
    (1..=max_len as u32).map(|len| a * a.saturating_sub(1).pow(len - 1)).sum()
}

struct SearchCtx {
    alphabet: Vec<Letter>,
    perms: Vec<Permutation>,
    images: Vec<Matrix>,
    max_len: usize,
}

impl SearchCtx {
    fn walk(&self, prefix: &mut Vec<usize>, perm: &Permutation, image: &Matrix, out: &mut Vec<Vec<usize>>) {
        if perm.is_identity() && image.is_identity() {
            out.push(prefix.clone());
        }
        if prefix.len() == self.max_len {
            return;
        }
        let last = prefix.last().map(|&a| self.alphabet[a]);
        for (a, letter) in self.alphabet.iter().enumerate() {
            if last.is_some_and(|l| l.cancels(letter)) {
                continue;
            }
            prefix.push(a);
            let next_image = image.product(&self.images[a]).expect("same dimension");
            self.walk(prefix, &perm.compose(&self.perms[a]), &next_image, out);
            prefix.pop();
        }
    }
}

/// All nonempty freely reduced words of length at most `max_len` over
/// [`search_alphabet`] that are pure and lie in the kernel of
/// `ρ ∘ f_d ∘ p_k`, sorted by length and then lexicographically.
///
/// Words that are not freely reduced are never visited: each reduces to
/// a shorter candidate that is.
pub fn search_kernel(n: usize, k: usize, d: i64, max_len: usize) -> Result<Vec<SearchResult>> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    if k < 1 || k > n + 1 {
        return Err(Error::StrandOutOfRange { k, max: n + 1 });
    }
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let alphabet = search_alphabet(n, k);
    if max_len > MAX_SEARCH_LEN {
        return Err(Error::SearchBudget(format!("max_len {max_len} > {MAX_SEARCH_LEN}")));
    }
    if alphabet.len() > MAX_SEARCH_ALPHABET {
        return Err(Error::SearchBudget(format!(
            "alphabet of {} letters > {MAX_SEARCH_ALPHABET}",
            alphabet.len()
        )));
    }
    let candidates = candidate_count(alphabet.len(), max_len);
    if candidates > MAX_SEARCH_CANDIDATES {
        return Err(Error::SearchBudget(format!(
            "{candidates} candidates > {MAX_SEARCH_CANDIDATES}"
        )));
    }

    let flavor = Flavor::Classical(n + 1);
    let mut images = Vec::with_capacity(alphabet.len());
    for l in &alphabet {
        let projected = Word::from_trusted(Flavor::Cylindrical(n), pk_letter_image(l, 0, k, n)?);
        images.push(rho_word(&stabilize_fd(&projected, d)?));
    }
    let ctx = SearchCtx {
        perms: alphabet.iter().map(|l| Permutation::of_letter(l, n + 1)).collect(),
        alphabet,
        images,
        max_len,
    };

    let mut found: Vec<Vec<usize>> = if max_len == 0 {
        Vec::new()
    } else {
        (0..ctx.alphabet.len())
            .into_par_iter()
            .map(|a| {
                let mut out = Vec::new();
                ctx.walk(&mut vec![a], &ctx.perms[a], &ctx.images[a], &mut out);
                out
            })
            .flatten()
            .collect()
    };
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    found
        .into_iter()
        .map(|idx| {
            let word = Word::from_trusted(flavor, idx.iter().map(|&a| ctx.alphabet[a]).collect());
            let verified = mn_map::<num_bigint::BigInt>(&word, k, d)?.is_identity();
            let freely_trivial = word.free_reduce().is_empty();
            Ok(SearchResult { word, verified, freely_trivial })
        })
        .collect()
}
