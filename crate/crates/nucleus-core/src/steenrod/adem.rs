use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::Prime;
use crate::fp::binom_mod;

use super::word::{Letter, SteenrodWord};

/// An `F_p`-linear combination of admissible monomials, the normal form for
/// elements of the Steenrod algebra. Coefficients are kept in `1..p`; an
/// empty term map is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleElement {
    prime: Prime,
    terms: BTreeMap<Vec<Letter>, u64>,
}

impl AdmissibleElement {
    pub fn zero(prime: Prime) -> Self {
        AdmissibleElement {
            prime,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(prime: Prime) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), 1);
        AdmissibleElement { prime, terms }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (SteenrodWord, u64)> + '_ {
        self.terms.iter().map(|(letters, &c)| {
            (
                SteenrodWord::new(self.prime, letters.clone()).expect("stored terms are valid"),
                c,
            )
        })
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, coeff: u64, letters: Vec<Letter>) {
        use alloc::collections::btree_map::Entry;
        let p = self.prime.get();
        let c = coeff % p;
        if c == 0 {
            return;
        }
        match self.terms.entry(letters) {
            Entry::Occupied(mut e) => {
                let v = (*e.get() + c) % p;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, rhs: &AdmissibleElement) -> AdmissibleElement {
        assert_eq!(self.prime, rhs.prime);
        let mut out = self.clone();
        for (letters, &c) in &rhs.terms {
            out.add_term(c, letters.clone());
        }
        out
    }

    pub fn scale(&self, c: u64) -> AdmissibleElement {
        let mut out = AdmissibleElement::zero(self.prime);
        for (letters, &v) in &self.terms {
            out.add_term(v * (c % self.prime.get()), letters.clone());
        }
        out
    }

    /// Product in the algebra: concatenate term-by-term and re-reduce.
    pub fn mul(&self, rhs: &AdmissibleElement) -> AdmissibleElement {
        assert_eq!(self.prime, rhs.prime);
        let mut out = AdmissibleElement::zero(self.prime);
        for (la, &ca) in &self.terms {
            for (lb, &cb) in &rhs.terms {
                let mut letters = la.clone();
                letters.extend_from_slice(lb);
                let reduced = reduce_letters(self.prime, letters);
                out = out.add(&reduced.scale(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for AdmissibleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if coeff != 1 {
                write!(f, "{coeff} ")?;
            }
            write!(f, "{word}")?;
        }
        Ok(())
    }
}

fn sign(k: u32, p: u64) -> u64 {
    if k.is_multiple_of(2) {
        1
    } else {
        p - 1
    }
}

/// Rewrites a word to its admissible normal form with the Adem relations,
/// always resolving the leftmost inadmissible configuration first.
pub fn adem_reduce(word: &SteenrodWord) -> AdmissibleElement {
    reduce_letters(word.prime(), word.letters().to_vec())
}

fn reduce_letters(prime: Prime, letters: Vec<Letter>) -> AdmissibleElement {
    let p = prime.get();
    let mut out = AdmissibleElement::zero(prime);
    let mut stack: Vec<(u64, Vec<Letter>)> = vec![(1, letters)];
    while let Some((coeff, ls)) = stack.pop() {
        let probe = SteenrodWord::new(prime, ls.clone()).expect("letters stay valid");
        let Some(i) = probe.first_violation() else {
            out.add_term(coeff, ls);
            continue;
        };
        match (ls[i], ls.get(i + 1).copied(), ls.get(i + 2).copied()) {
            (Letter::Sq(a), Some(Letter::Sq(b)), _) => {
                for c in 0..=(a / 2) {
                    let bc = binom_mod((b as i64) - (c as i64) - 1, (a as i64) - 2 * (c as i64), 2);
                    if bc == 0 {
                        continue;
                    }
                    let mut nl: Vec<Letter> = ls[..i].to_vec();
                    nl.push(Letter::Sq(a + b - c));
                    if c > 0 {
                        nl.push(Letter::Sq(c));
                    }
                    nl.extend_from_slice(&ls[i + 2..]);
                    stack.push((coeff, nl));
                }
            }
            (Letter::Beta, Some(Letter::Beta), _) => {
                // b b = 0: the whole term dies.
            }
            (Letter::P(a), Some(Letter::P(b)), _) => {
                for t in 0..=(a / p as u32) {
                    let top = (p as i64 - 1) * ((b as i64) - (t as i64)) - 1;
                    let bc = binom_mod(top, (a as i64) - (p as i64) * (t as i64), p);
                    if bc == 0 {
                        continue;
                    }
                    let c = bc * sign(a + t, p) % p;
                    let mut nl: Vec<Letter> = ls[..i].to_vec();
                    nl.push(Letter::P(a + b - t));
                    if t > 0 {
                        nl.push(Letter::P(t));
                    }
                    nl.extend_from_slice(&ls[i + 2..]);
                    stack.push((coeff * c, nl));
                }
            }
            (Letter::P(a), Some(Letter::Beta), Some(Letter::P(b))) => {
                // Terms with the Bockstein out front.
                for t in 0..=(a / p as u32) {
                    let top = (p as i64 - 1) * ((b as i64) - (t as i64));
                    let bc = binom_mod(top, (a as i64) - (p as i64) * (t as i64), p);
                    if bc == 0 {
                        continue;
                    }
                    let c = bc * sign(a + t, p) % p;
                    let mut nl: Vec<Letter> = ls[..i].to_vec();
                    nl.push(Letter::Beta);
                    nl.push(Letter::P(a + b - t));
                    if t > 0 {
                        nl.push(Letter::P(t));
                    }
                    nl.extend_from_slice(&ls[i + 3..]);
                    stack.push((coeff * c, nl));
                }
                // Terms with the Bockstein in the middle, opposite sign.
                if a >= 1 {
                    for t in 0..=((a - 1) / p as u32) {
                        let top = (p as i64 - 1) * ((b as i64) - (t as i64)) - 1;
                        let bc = binom_mod(top, (a as i64) - (p as i64) * (t as i64) - 1, p);
                        if bc == 0 {
                            continue;
                        }
                        let c = bc * sign(a + t + 1, p) % p;
                        let mut nl: Vec<Letter> = ls[..i].to_vec();
                        nl.push(Letter::P(a + b - t));
                        nl.push(Letter::Beta);
                        if t > 0 {
                            nl.push(Letter::P(t));
                        }
                        nl.extend_from_slice(&ls[i + 3..]);
                        stack.push((coeff * c, nl));
                    }
                }
            }
            other => unreachable!("violation index points at a known pattern: {other:?}"),
        }
    }
    out
}

/// Every admissible monomial of the given degree, in lexicographic order.
pub fn admissible_basis(prime: Prime, degree: u32) -> Vec<SteenrodWord> {
    let p = prime.get();
    let mut out: Vec<Vec<Letter>> = Vec::new();
    if p == 2 {
        fn go(rem: u32, max_first: u32, prefix: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
            if rem == 0 {
                out.push(prefix.clone());
                return;
            }
            for a in 1..=rem.min(max_first) {
                prefix.push(Letter::Sq(a));
                go(rem - a, a / 2, prefix, out);
                prefix.pop();
            }
        }
        go(degree, degree, &mut Vec::new(), &mut out);
    } else {
        // beta^{e0} P^{s1} beta^{e1} ... with s_i >= p s_{i+1} + e_i.
        fn go(p: u32, rem: u32, cap: u32, prefix: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
            if rem == 0 {
                out.push(prefix.clone());
                return;
            }
            let block = 2 * (p - 1);
            for s in 1..=cap {
                let deg_p = s * block;
                if deg_p > rem {
                    break;
                }
                prefix.push(Letter::P(s));
                if deg_p == rem {
                    out.push(prefix.clone());
                } else {
                    // no Bockstein after P^s
                    go(p, rem - deg_p, s / p, prefix, out);
                    // Bockstein after P^s
                    prefix.push(Letter::Beta);
                    if deg_p + 1 == rem {
                        out.push(prefix.clone());
                    } else if s >= 1 {
                        go(p, rem - deg_p - 1, (s - 1) / p, prefix, out);
                    }
                    prefix.pop();
                }
                prefix.pop();
            }
        }
        let p32 = p as u32;
        // optional leading Bockstein
        go(p32, degree, degree, &mut Vec::new(), &mut out);
        if degree >= 1 {
            let mut with_beta: Vec<Vec<Letter>> = Vec::new();
            if degree == 1 {
                with_beta.push(vec![Letter::Beta]);
            } else {
                go(p32, degree - 1, degree, &mut Vec::new(), &mut with_beta);
                for w in &mut with_beta {
                    w.insert(0, Letter::Beta);
                }
            }
            out.extend(with_beta);
        }
    }
    out.sort();
    out.into_iter()
        .map(|letters| SteenrodWord::new(prime, letters).expect("enumerated monomials are valid"))
        .collect()
}

/// The dimension of the whole algebra in one degree.
pub fn algebra_dimension(prime: Prime, degree: u32) -> usize {
    admissible_basis(prime, degree).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};
    use alloc::vec::Vec;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn reduce_str(prime: u64, s: &str) -> String {
        adem_reduce(&SteenrodWord::parse(p(prime), s).unwrap()).to_string()
    }

    #[test]
    fn adem_at_two() {
        // binomial C(0,1) = 0 kills Sq1 Sq1
        assert_eq!(reduce_str(2, "Sq1 Sq1"), "0");
        assert_eq!(reduce_str(2, "Sq2 Sq2"), "Sq3 Sq1");
        assert_eq!(reduce_str(2, "Sq1 Sq2"), "Sq3");
        assert_eq!(reduce_str(2, "Sq2 Sq1"), "Sq2 Sq1");
        assert_eq!(reduce_str(2, "Sq1 Sq2 Sq1"), "Sq3 Sq1");
        assert_eq!(reduce_str(2, "Sq3 Sq1"), "Sq3 Sq1");
        assert_eq!(reduce_str(2, "Sq1 Sq3"), "0");
        assert_eq!(reduce_str(2, "Sq2 Sq3"), "Sq4 Sq1 + Sq5");
    }

    #[test]
    fn adem_at_three() {
        // classical: P1 P1 = 2 P2 at p = 3
        assert_eq!(reduce_str(3, "P1 P1"), "2 P2");
        // b b = 0
        assert_eq!(reduce_str(3, "b b"), "0");
        // and an admissible word is untouched
        assert_eq!(reduce_str(3, "P3 P1"), "P3 P1");
        assert_eq!(reduce_str(3, "b P3 P1"), "b P3 P1");
    }

    #[test]
    fn basis_at_two() {
        let names = |n: u32| -> Vec<String> {
            admissible_basis(p(2), n)
                .iter()
                .map(|w| w.to_string())
                .collect()
        };
        assert_eq!(names(0), ["1"]);
        assert_eq!(names(1), ["Sq1"]);
        assert_eq!(names(2), ["Sq2"]);
        assert_eq!(names(3), ["Sq2 Sq1", "Sq3"]);
        assert_eq!(names(4), ["Sq3 Sq1", "Sq4"]);
        assert_eq!(names(5), ["Sq4 Sq1", "Sq5"]);
        assert_eq!(names(6), ["Sq4 Sq2", "Sq5 Sq1", "Sq6"]);
        assert_eq!(names(7), ["Sq4 Sq2 Sq1", "Sq5 Sq2", "Sq6 Sq1", "Sq7"]);
    }

    #[test]
    fn basis_at_three() {
        let names = |n: u32| -> Vec<String> {
            admissible_basis(p(3), n)
                .iter()
                .map(|w| w.to_string())
                .collect()
        };
        assert_eq!(names(0), ["1"]);
        assert_eq!(names(1), ["b"]);
        assert!(names(2).is_empty());
        assert!(names(3).is_empty());
        assert_eq!(names(4), ["P1"]);
        assert_eq!(names(5), ["b P1", "P1 b"]);
        assert_eq!(names(6), ["b P1 b"]);
        assert_eq!(names(8), ["P2"]);
        assert_eq!(names(9), ["b P2", "P2 b"]);
    }

    #[test]
    fn reduction_lands_in_basis() {
        // every reduced term of the right degree appears in the enumerated basis
        for word in [
            SteenrodWord::squares(&[1, 2, 3]),
            SteenrodWord::squares(&[2, 4, 2]),
            SteenrodWord::squares(&[1, 1, 5, 2]),
            SteenrodWord::squares(&[7, 7]),
        ] {
            let deg = word.degree();
            let basis = admissible_basis(p(2), deg);
            for (term, _) in adem_reduce(&word).terms() {
                assert_eq!(term.degree(), deg);
                assert!(term.is_admissible());
                assert!(
                    basis.contains(&term),
                    "{term} missing from degree-{deg} basis"
                );
            }
        }
    }

    #[test]
    fn odd_reduction_lands_in_basis() {
        for s in ["P1 P1 P1", "P1 b P1", "P2 P1 b", "b P1 P2", "P1 P2"] {
            let word = SteenrodWord::parse(p(3), s).unwrap();
            let deg = word.degree();
            let basis = admissible_basis(p(3), deg);
            for (term, _) in adem_reduce(&word).terms() {
                assert!(term.is_admissible(), "{term} not admissible (from {s})");
                assert!(
                    basis.contains(&term),
                    "{term} missing from degree-{deg} basis"
                );
            }
        }
    }

    #[test]
    fn element_product_matches_concat_reduction() {
        let a = adem_reduce(&SteenrodWord::squares(&[2, 2]));
        let b = adem_reduce(&SteenrodWord::squares(&[3, 1]));
        let via_elements = a.mul(&b);
        let via_concat = adem_reduce(&SteenrodWord::squares(&[2, 2, 3, 1]));
        assert_eq!(via_elements, via_concat);
    }
}
