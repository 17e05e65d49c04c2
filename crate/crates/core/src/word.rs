//! Braid words over the classical, cylindrical and virtual-cylindrical
//! generator sets.
//!
//! A [`Word`] is a flat sequence of [`Letter`]s tagged with a [`Flavor`]
//! that fixes the strand count and which generator kinds are admitted:
//!
//! | flavor               | admits        |
//! |----------------------|---------------|
//! | `Classical(n)`       | σ             |
//! | `Cylindrical(n)`     | σ, ζ          |
//! | `VirtualCylindrical` | σ, τ, ζ       |
//!
//! Words are never reduced implicitly; [`Word::free_reduce`] is the only
//! normalization performed here.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Generator kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// Classical crossing σ_i.
    Sigma,
    /// Virtual crossing τ_i.
    Tau,
    /// Cyclic shift ζ.
    Zeta,
}

/// Exponent sign of a letter. `Pos` sorts before `Neg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A single generator or inverse generator.
///
/// The derived ordering (kind, then index, then sign) is the letter order
/// used for lexicographic enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    kind: Kind,
    index: usize,
    sign: Sign,
}

impl Letter {
    /// σ_index^sign. Panics if `index == 0`.
    pub fn sigma(index: usize, sign: Sign) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Letter { kind: Kind::Sigma, index, sign }
    }

    /// τ_index^sign. Panics if `index == 0`.
    pub fn tau(index: usize, sign: Sign) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Letter { kind: Kind::Tau, index, sign }
    }

    pub fn zeta(sign: Sign) -> Self {
        Letter { kind: Kind::Zeta, index: 0, sign }
    }

    /// Letter from a signed classical index: `3` is σ_3, `-3` is σ_3^{-1}.
    pub fn from_signed(i: i64) -> Option<Self> {
        if i == 0 {
            return None;
        }
        let sign = if i > 0 { Sign::Pos } else { Sign::Neg };
        Some(Letter::sigma(i.unsigned_abs() as usize, sign))
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Strand index; always 0 for ζ.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn inverse(&self) -> Self {
        Letter { sign: self.sign.flip(), ..*self }
    }

    /// True when `self · other` is a free cancellation.
    pub fn cancels(&self, other: &Letter) -> bool {
        self.kind == other.kind && self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Sigma => write!(f, "s{}", self.index)?,
            Kind::Tau => write!(f, "t{}", self.index)?,
            Kind::Zeta => write!(f, "z")?,
        }
        if self.sign == Sign::Neg {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Which group a word lives in, together with its strand count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Classical(usize),
    Cylindrical(usize),
    VirtualCylindrical(usize),
}

impl Flavor {
    pub fn strands(&self) -> usize {
        match *self {
            Flavor::Classical(n) | Flavor::Cylindrical(n) | Flavor::VirtualCylindrical(n) => n,
        }
    }

    pub fn admits(&self, kind: Kind) -> bool {
        match (self, kind) {
            (_, Kind::Sigma) => true,
            (Flavor::Classical(_), _) => false,
            (Flavor::Cylindrical(_), Kind::Tau) => false,
            _ => true,
        }
    }

    /// Checks kind admission and the 1..n-1 index range.
    pub fn check(&self, letter: &Letter) -> Result<()> {
        if !self.admits(letter.kind) {
            return Err(Error::FlavorViolation { letter: *letter, flavor: *self });
        }
        if letter.kind != Kind::Zeta && (letter.index < 1 || letter.index >= self.strands()) {
            return Err(Error::IndexOutOfRange { letter: *letter, flavor: *self });
        }
        Ok(())
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Classical(n) => write!(f, "B_{n}"),
            Flavor::Cylindrical(n) => write!(f, "CPB_{n}"),
            Flavor::VirtualCylindrical(n) => write!(f, "VCB_{n}"),
        }
    }
}

/// A finite sequence of letters in a fixed group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    flavor: Flavor,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(flavor: Flavor, letters: Vec<Letter>) -> Result<Self> {
        if flavor.strands() == 0 {
            return Err(Error::TooFewStrands(0));
        }
        for l in &letters {
            flavor.check(l)?;
        }
        Ok(Word { flavor, letters })
    }

    /// Constructor for letters already known to be legal in `flavor`.
    pub(crate) fn from_trusted(flavor: Flavor, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| flavor.check(l).is_ok()));
        Word { flavor, letters }
    }

    pub fn empty(flavor: Flavor) -> Self {
        Word { flavor, letters: Vec::new() }
    }

    /// Parses the textual grammar (`"s1 s2^-1 z^2 t3"`) or the compact
    /// classical form (`"1 -2 1"`). Tokens of both forms may be mixed.
    pub fn parse(text: &str, flavor: Flavor) -> Result<Self> {
        if flavor.strands() == 0 {
            return Err(Error::TooFewStrands(0));
        }
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let syntax = |reason| Error::Syntax { position, token: token.to_string(), reason };
            let (letter, count) = parse_token(token).map_err(syntax)?;
            flavor.check(&letter)?;
            letters.extend(std::iter::repeat_n(letter, count));
        }
        Ok(Word { flavor, letters })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn strands(&self) -> usize {
        self.flavor.strands()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`, without cancellation.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch { left: self.flavor, right: other.flavor });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { flavor: self.flavor, letters })
    }

    /// Formal inverse: reversed, every sign flipped (τ included).
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(Letter::inverse).collect();
        Word { flavor: self.flavor, letters }
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word> {
        a.concat(b)?.concat(&a.inverse())?.concat(&b.inverse())
    }

    /// Same flavor, `self^power` for `power >= 0`.
    pub fn pow(&self, power: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * power);
        for _ in 0..power {
            letters.extend_from_slice(&self.letters);
        }
        Word { flavor: self.flavor, letters }
    }

    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for l in &self.letters {
            match stack.last() {
                Some(top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(*l),
            }
        }
        Word { flavor: self.flavor, letters: stack }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(&w[1]))
    }

    pub fn underlying_permutation(&self) -> Permutation {
        let n = self.strands();
        let mut perm = Permutation::identity(n);
        for l in &self.letters {
            perm = perm.compose(&Permutation::of_letter(l, n));
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.underlying_permutation().is_identity()
    }

    /// Signed count of σ letters.
    pub fn sigma_exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.kind == Kind::Sigma)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    /// Reinterprets the letters in another flavor, re-checking legality.
    pub fn with_flavor(&self, flavor: Flavor) -> Result<Word> {
        Word::new(flavor, self.letters.clone())
    }
}

/// Largest accepted `|k|` in `g^k`.
const MAX_EXPONENT: usize = 1 << 20;

fn parse_token(token: &str) -> std::result::Result<(Letter, usize), &'static str> {
    if let Ok(i) = token.parse::<i64>() {
        let letter = Letter::from_signed(i).ok_or("generator index must be nonzero")?;
        return Ok((letter, 1));
    }
    let (base, exponent) = match token.split_once('^') {
        Some((b, e)) => (b, parse_exponent(e)?),
        None => (token, 1),
    };
    let mut chars = base.chars();
    let head = chars.next().ok_or("empty generator")?;
    let rest = chars.as_str();
    let letter_of = |sign| -> std::result::Result<Letter, &'static str> {
        match head {
            's' | 't' => {
                let index = parse_positive(rest).ok_or("expected a positive generator index")?;
                Ok(if head == 's' { Letter::sigma(index, sign) } else { Letter::tau(index, sign) })
            }
            'z' if rest.is_empty() => Ok(Letter::zeta(sign)),
            'z' => Err("z takes no index"),
            _ => Err("unknown generator, expected s<i>, t<i> or z"),
        }
    };
    let sign = if exponent > 0 { Sign::Pos } else { Sign::Neg };
    Ok((letter_of(sign)?, exponent.unsigned_abs() as usize))
}

fn parse_exponent(e: &str) -> std::result::Result<i64, &'static str> {
    let (neg, digits) = match e.strip_prefix('-') {
        Some(d) => (true, d),
        None => (false, e),
    };
    let magnitude = parse_positive(digits).ok_or("exponent must be a nonzero integer")?;
    if magnitude > MAX_EXPONENT {
        return Err("exponent too large");
    }
    let magnitude = magnitude as i64;
    Ok(if neg { -magnitude } else { magnitude })
}

fn parse_positive(digits: &str) -> Option<usize> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse::<usize>().ok().filter(|&v| v > 0 && v <= u32::MAX as usize)
}

impl fmt::Display for Word {
    /// Grammar form with maximal runs collapsed into exponents, so that
    /// the output parses back to the same word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match l.kind {
                Kind::Sigma => write!(f, "s{}", l.index)?,
                Kind::Tau => write!(f, "t{}", l.index)?,
                Kind::Zeta => write!(f, "z")?,
            }
            let exp = run as i64 * l.sign.as_i64();
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// The word σ_1 σ_2 ⋯ σ_{n-1} in `Cylindrical(n)`.
pub fn delta_c(n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let letters = (1..n).map(|i| Letter::sigma(i, Sign::Pos)).collect();
    Ok(Word::from_trusted(Flavor::Cylindrical(n), letters))
}

/// The word τ_1 τ_2 ⋯ τ_{n-1} in `VirtualCylindrical(n)`.
pub fn delta_v(n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let letters = (1..n).map(|i| Letter::tau(i, Sign::Pos)).collect();
    Ok(Word::from_trusted(Flavor::VirtualCylindrical(n), letters))
}

/// A permutation of `{1..n}`; `images[i-1]` is where strand `i` goes.
///
/// The permutation matrix has a 1 at `(images[j], j)`, which makes it
/// agree with the representation matrices at `t = s = 1`. With that
/// convention a word's permutation is the left-to-right product
/// `perm(a·b) = perm(a) ∘ perm(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Validates that `images` is a bijection of `{1..n}`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The permutation underlying ζ: `1 → n`, `j → j-1` otherwise.
    pub fn cyclic_shift(n: usize) -> Self {
        let images = (1..=n).map(|j| if j == 1 { n } else { j - 1 }).collect();
        Permutation { images }
    }

    pub fn of_letter(letter: &Letter, n: usize) -> Self {
        match letter.kind {
            Kind::Sigma | Kind::Tau => Self::transposition(n, letter.index),
            Kind::Zeta => match letter.sign {
                Sign::Pos => Self::cyclic_shift(n),
                Sign::Neg => Self::cyclic_shift(n).inverse(),
            },
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of strand `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        let images = other.images.iter().map(|&j| self.images[j - 1]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| j == i + 1)
    }

    /// 0/1 matrix with a 1 at `(images[j], j)`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0; n]; n];
        for (j, &i) in self.images.iter().enumerate() {
            m[i - 1][j] = 1;
        }
        m
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.images.iter().enumerate().map(|(i, j)| format!("{}->{}", i + 1, j)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Flavor {
    type Err = Error;

    /// `classical:5`, `cylindrical:4`, `vcb:3`.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::Malformed(format!("flavor {s:?}"));
        let (name, n) = s.split_once(':').ok_or_else(malformed)?;
        let n: usize = n.parse().map_err(|_| malformed())?;
        match name {
            "classical" => Ok(Flavor::Classical(n)),
            "cylindrical" => Ok(Flavor::Cylindrical(n)),
            "vcb" => Ok(Flavor::VirtualCylindrical(n)),
            _ => Err(malformed()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(i: usize) -> Letter {
        Letter::sigma(i, Sign::Pos)
    }
    fn si(i: usize) -> Letter {
        Letter::sigma(i, Sign::Neg)
    }

    #[test]
    fn parse_tokens() {
        let w = Word::parse("s1 s2^-1", Flavor::Classical(3)).unwrap();
        assert_eq!(w.letters(), &[s(1), si(2)]);
        let w = Word::parse("z^2", Flavor::Cylindrical(4)).unwrap();
        assert_eq!(w.letters(), &[Letter::zeta(Sign::Pos); 2]);
        let w = Word::parse("1 -2 1", Flavor::Classical(3)).unwrap();
        assert_eq!(w.letters(), &[s(1), si(2), s(1)]);
        let w = Word::parse("s1 s2^-1 z^2 t3", Flavor::VirtualCylindrical(4)).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(Word::parse("  ", Flavor::Classical(2)).unwrap().len(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Word::parse("t3", Flavor::Classical(5)),
            Err(Error::FlavorViolation { .. })
        ));
        assert!(matches!(
            Word::parse("z", Flavor::Classical(5)),
            Err(Error::FlavorViolation { .. })
        ));
        assert!(matches!(
            Word::parse("s4", Flavor::Classical(4)),
            Err(Error::IndexOutOfRange { .. })
        ));
        for bad in ["s0", "x1", "s1^0", "s1^", "z3", "s", "s1^-", "0", "s-1"] {
            match Word::parse(bad, Flavor::VirtualCylindrical(5)) {
                Err(Error::Syntax { position: 0, .. }) => {}
                other => panic!("{bad}: {other:?}"),
            }
        }
        match Word::parse("s1 s2 q", Flavor::Classical(4)) {
            Err(Error::Syntax { position, token, .. }) => {
                assert_eq!(position, 2);
                assert_eq!(token, "q");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn concat_and_inverse() {
        let f = Flavor::Classical(3);
        let a = Word::new(f, vec![s(1)]).unwrap();
        let b = Word::new(f, vec![si(1)]).unwrap();
        assert_eq!(a.concat(&b).unwrap().letters(), &[s(1), si(1)]);
        assert_eq!(Word::empty(f).concat(&a).unwrap(), a);
        let other = Word::empty(Flavor::Cylindrical(3));
        assert!(matches!(a.concat(&other), Err(Error::FlavorMismatch { .. })));

        let w = Word::new(f, vec![s(1), si(2)]).unwrap();
        assert_eq!(w.inverse().letters(), &[s(2), si(1)]);
        assert!(Word::empty(f).inverse().is_empty());
        let v = Word::parse("z t1", Flavor::VirtualCylindrical(3)).unwrap();
        assert_eq!(v.inverse().letters(), &[Letter::tau(1, Sign::Neg), Letter::zeta(Sign::Neg)]);
    }

    #[test]
    fn commutators() {
        let f = Flavor::Classical(5);
        let a = Word::new(f, vec![s(1)]).unwrap();
        let b = Word::new(f, vec![s(3)]).unwrap();
        assert!(Word::commutator(&Word::empty(f), &b).unwrap().free_reduce().is_empty());
        assert!(Word::commutator(&a, &a).unwrap().free_reduce().is_empty());
        let c = Word::commutator(&a, &b).unwrap();
        assert_eq!(c.letters(), &[s(1), s(3), si(1), si(3)]);
        assert_eq!(c.free_reduce().len(), 4);
    }

    #[test]
    fn free_reduction() {
        let f = Flavor::Classical(3);
        assert!(Word::new(f, vec![s(1), si(1)]).unwrap().free_reduce().is_empty());
        let w = Word::new(f, vec![s(1), s(2), si(2), s(1)]).unwrap();
        assert_eq!(w.free_reduce().letters(), &[s(1), s(1)]);
        let w = Word::new(f, vec![s(1), s(2)]).unwrap();
        assert_eq!(w.free_reduce(), w);
    }

    #[test]
    fn permutations() {
        let f = Flavor::Classical(3);
        let w = Word::new(f, vec![s(1)]).unwrap();
        assert_eq!(w.underlying_permutation().images(), &[2, 1, 3]);
        assert!(!w.is_pure());
        assert!(Word::new(f, vec![s(1), s(1)]).unwrap().is_pure());
        let z = Word::parse("z", Flavor::Cylindrical(3)).unwrap();
        let p = z.underlying_permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (3, 1, 2));
        assert_eq!(p.matrix(), vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        assert!(Word::parse("z^3", Flavor::Cylindrical(3)).unwrap().is_pure());
        assert!(Permutation::from_images(vec![1, 1]).is_none());
        assert!(Permutation::from_images(vec![2, 3, 1]).is_some());
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_c(3).unwrap().letters(), &[s(1), s(2)]);
        assert_eq!(delta_c(2).unwrap().letters(), &[s(1)]);
        assert_eq!(delta_c(3).unwrap().flavor(), Flavor::Cylindrical(3));
        let v = delta_v(4).unwrap();
        assert_eq!(v.letters(), &[1, 2, 3].map(|i| Letter::tau(i, Sign::Pos)));
        assert!(matches!(delta_c(1), Err(Error::TooFewStrands(1))));
        assert!(matches!(delta_v(0), Err(Error::TooFewStrands(0))));
    }

    #[test]
    fn display_collapses_runs() {
        let w = Word::parse("s1 s1 s2^-1 z^-3 t2", Flavor::VirtualCylindrical(3)).unwrap();
        assert_eq!(w.to_string(), "s1^2 s2^-1 z^-3 t2");
        assert_eq!(Word::empty(Flavor::Classical(2)).to_string(), "");
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        (2usize..7, 0usize..3).prop_flat_map(|(n, fl)| {
            let flavor = match fl {
                0 => Flavor::Classical(n),
                1 => Flavor::Cylindrical(n),
                _ => Flavor::VirtualCylindrical(n),
            };
            let letter = (0usize..3, 1..n, any::<bool>()).prop_filter_map(
                "kind not admitted",
                move |(k, i, pos)| {
                    let sign = if pos { Sign::Pos } else { Sign::Neg };
                    let l = match k {
                        0 => Letter::sigma(i, sign),
                        1 => Letter::tau(i, sign),
                        _ => Letter::zeta(sign),
                    };
                    flavor.check(&l).ok().map(|_| l)
                },
            );
            prop::collection::vec(letter, 0..30)
                .prop_map(move |letters| Word::new(flavor, letters).unwrap())
        })
    }

    proptest! {
        #[test]
        fn free_reduce_idempotent(w in arb_word()) {
            let r = w.free_reduce();
            prop_assert!(r.is_freely_reduced());
            prop_assert_eq!(r.free_reduce(), r);
        }

        #[test]
        fn word_times_inverse_reduces_to_empty(w in arb_word()) {
            prop_assert!(w.concat(&w.inverse()).unwrap().free_reduce().is_empty());
        }

        #[test]
        fn permutation_is_multiplicative(a in arb_word(), b in arb_word()) {
            let b = Word::new(a.flavor(), b.letters().iter().copied()
                .filter(|l| a.flavor().check(l).is_ok()).collect()).unwrap();
            let ab = a.concat(&b).unwrap();
            prop_assert_eq!(
                ab.underlying_permutation(),
                a.underlying_permutation().compose(&b.underlying_permutation())
            );
            prop_assert_eq!(a.inverse().underlying_permutation(), a.underlying_permutation().inverse());
        }

        #[test]
        fn format_parse_round_trip(w in arb_word()) {
            prop_assert_eq!(Word::parse(&w.to_string(), w.flavor()).unwrap(), w);
        }
    }
}
