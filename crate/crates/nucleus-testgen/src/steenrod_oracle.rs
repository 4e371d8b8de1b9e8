//! Reference computations for the Steenrod layer.
//!
//! Binomials come from Pascal's rule rather than Lucas' theorem, polynomial
//! actions from the Cartan formula rather than closed binomial expressions,
//! and subalgebra quotients from an explicit basis closure rather than the
//! left-ideal presentation. Each pairs with a different production code path.

use nucleus_core::arith::Prime;
use nucleus_core::fp::RowSpace;
use nucleus_core::steenrod::{admissible_basis, AdmissibleElement, SteenrodWord};

/// Pascal-triangle binomial coefficients mod p (no Lucas).
pub fn pascal_binom(n: usize, k: usize, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = (row[i - 1] + row[i]) % p;
        }
        if !row.is_empty() {
            *next.last_mut().unwrap() = 1;
        }
        row = next;
    }
    row[k] % p
}

/// One Adem rewriting step at p = 2 computed directly from the sum formula,
/// using the Pascal binomials: returns the admissible pairs `(a+b-c, c)` with
/// nonzero coefficient for `Sq^a Sq^b`, `a < 2b`.
pub fn adem_step_two(a: u32, b: u32) -> Vec<(u32, u32)> {
    assert!(a < 2 * b);
    let mut out = Vec::new();
    for c in 0..=(a / 2) {
        let top = b as i64 - c as i64 - 1;
        let bot = a as i64 - 2 * c as i64;
        if top < 0 || bot < 0 || bot > top {
            continue;
        }
        if pascal_binom(top as usize, bot as usize, 2) == 1 {
            out.push((a + b - c, c));
        }
    }
    out
}

/// Coefficient of `x^{n + k/d}` in `Sq^k(x^n)` for `F_2[x]`, `|x| = d`,
/// computed purely by the Cartan recursion
/// `Sq^k(x^n) = x Sq^k(x^{n-1}) + x^2 Sq^{k-d}(x^{n-1})`.
pub fn cartan_power_coefficient(d: u32, n: u32, k: u32) -> u64 {
    if !k.is_multiple_of(d) {
        return 0;
    }
    fn go(d: u32, n: u32, k: u32) -> u64 {
        if n == 0 {
            return u64::from(k == 0);
        }
        if k == 0 {
            return 1;
        }
        let mut acc = go(d, n - 1, k);
        if k >= d {
            acc += go(d, n - 1, k - d);
        }
        acc % 2
    }
    go(d, n, k)
}

/// Coefficient of `x^{n + k/d} u` in `Sq^k(x^n u)` for the Thom module, from
/// the Cartan formula with `Sq^{bd} u = x^b u` taken as given.
pub fn cartan_thom_coefficient(d: u32, n: u32, k: u32) -> u64 {
    if !k.is_multiple_of(d) {
        return 0;
    }
    let mut acc = 0u64;
    let m = k / d;
    for a in 0..=m {
        acc += cartan_power_coefficient(d, n, a * d);
    }
    acc % 2
}

/// Basis of the subalgebra generated by the given homogeneous elements, as a
/// left-multiplication closure, degree by degree up to `top`. Degree 0 (the
/// unit) is included.
pub fn subalgebra_basis(
    prime: Prime,
    generators: &[AdmissibleElement],
    top: u32,
) -> Vec<AdmissibleElement> {
    let coords = |e: &AdmissibleElement, degree: u32| -> Vec<u64> {
        let basis = admissible_basis(prime, degree);
        let mut v = vec![0u64; basis.len()];
        for (w, c) in e.terms() {
            let i = basis.iter().position(|b| *b == w).expect("term in basis");
            v[i] = c;
        }
        v
    };
    let degree_of =
        |e: &AdmissibleElement| -> u32 { e.terms().next().map(|(w, _)| w.degree()).unwrap_or(0) };

    let mut spans: Vec<RowSpace> = (0..=top)
        .map(|n| RowSpace::new(prime.get(), admissible_basis(prime, n).len()))
        .collect();
    let unit = AdmissibleElement::one(prime);
    spans[0].insert(coords(&unit, 0));
    let mut elements = vec![unit];
    let mut queue = elements.clone();
    while let Some(e) = queue.pop() {
        for g in generators {
            let prod = g.mul(&e);
            if prod.is_zero() {
                continue;
            }
            let d = degree_of(&prod);
            if d > top {
                continue;
            }
            if spans[d as usize].insert(coords(&prod, d)) {
                elements.push(prod.clone());
                queue.push(prod);
            }
        }
    }
    elements
}

/// Degreewise dimensions of `A / (A . B+)` computed from an explicit basis of
/// `B`: the relation space in degree `n` is spanned by `m . b` over all
/// positive-degree basis elements `b` of `B` and admissible `m`.
pub fn quotient_dims(prime: Prime, subalgebra: &[AdmissibleElement], bound: u32) -> Vec<usize> {
    let degree_of =
        |e: &AdmissibleElement| -> u32 { e.terms().next().map(|(w, _)| w.degree()).unwrap_or(0) };
    let mut out = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        let basis = admissible_basis(prime, n);
        let mut span = RowSpace::new(prime.get(), basis.len());
        for b in subalgebra {
            let bd = degree_of(b);
            if bd == 0 || bd > n {
                continue;
            }
            for m in admissible_basis(prime, n - bd) {
                let prod = word_element(&m).mul(b);
                let mut v = vec![0u64; basis.len()];
                for (w, c) in prod.terms() {
                    let i = basis.iter().position(|x| *x == w).expect("term in basis");
                    v[i] = c;
                }
                span.insert(v);
            }
        }
        out.push(basis.len() - span.dim());
    }
    out
}

fn word_element(w: &SteenrodWord) -> AdmissibleElement {
    nucleus_core::steenrod::adem_reduce(w)
}

/// Degreewise dimension of the whole algebra by enumerating the *other*
/// classical basis: monomials `xi_1^{a_1} xi_2^{a_2} ...` (degrees
/// `2(p^i - 1)`, or `2^i - 1` at p = 2) times a squarefree product of the
/// exterior generators (degrees `2 p^i - 1`, absent at p = 2). The two
/// bases must have the same size in every degree.
pub fn milnor_dimension(p: u64, degree: u32) -> usize {
    let poly_degrees: Vec<u32> = if p == 2 {
        (1..)
            .map(|i: u32| (1u32 << i) - 1)
            .take_while(|&d| d <= degree.max(1))
            .collect()
    } else {
        (1..)
            .map(|i: u32| 2 * (p as u32).pow(i) - 2)
            .take_while(|&d| d <= degree.max(1) && d > 0)
            .collect()
    };
    let ext_degrees: Vec<u32> = if p == 2 {
        Vec::new()
    } else {
        (0..)
            .map(|i: u32| 2 * (p as u32).pow(i) - 1)
            .take_while(|&d| d <= degree.max(1))
            .collect()
    };

    fn poly_count(rem: u32, gens: &[u32]) -> usize {
        match gens.split_first() {
            None => usize::from(rem == 0),
            Some((&g, rest)) => {
                let mut total = 0;
                let mut used = 0;
                while used <= rem {
                    total += poly_count(rem - used, rest);
                    used += g;
                }
                total
            }
        }
    }
    fn ext_subsets(rem: u32, gens: &[u32], poly: &[u32]) -> usize {
        match gens.split_first() {
            None => poly_count(rem, poly),
            Some((&g, rest)) => {
                let mut total = ext_subsets(rem, rest, poly);
                if g <= rem {
                    total += ext_subsets(rem - g, rest, poly);
                }
                total
            }
        }
    }
    ext_subsets(degree, &ext_degrees, &poly_degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_matches_lucas() {
        for p in [2u64, 3, 5] {
            for n in 0..12i64 {
                for k in 0..=n {
                    assert_eq!(
                        pascal_binom(n as usize, k as usize, p),
                        nucleus_core::fp::binom_mod(n, k, p)
                    );
                }
            }
        }
    }

    #[test]
    fn cartan_is_binomial() {
        // The recursion must reproduce C(n, k/d) mod 2 (which the production
        // code uses directly).
        for d in [1u32, 2, 4] {
            for n in 0..10 {
                for m in 0..10 {
                    assert_eq!(
                        cartan_power_coefficient(d, n, m * d),
                        pascal_binom(n as usize, m as usize, 2)
                    );
                }
            }
        }
    }

    #[test]
    fn a1_subalgebra_has_dimension_eight() {
        let p = Prime::new(2).unwrap();
        let gens: Vec<AdmissibleElement> = [&[1u32][..], &[2]]
            .iter()
            .map(|e| nucleus_core::steenrod::adem_reduce(&SteenrodWord::squares(e)))
            .collect();
        let basis = subalgebra_basis(p, &gens, 6);
        assert_eq!(basis.len(), 8);
    }
}
