//! Integer group-algebra arithmetic on the weight lattice and the iterated
//! Demazure-operator character, the independent oracle for tableau counts
//! and characters.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::cube::TwistedCube;
use crate::rootsys::{CartanMatrix, Weight};
use crate::tableaux::TableauSet;

/// A finitely supported integer-coefficient function on the weight lattice,
/// written in ϖ-basis exponents. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightPolynomial {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        WeightPolynomial::default()
    }

    /// The monomial `e^λ`.
    pub fn monomial(weight: Vec<i64>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(weight, 1);
        WeightPolynomial { terms }
    }

    pub fn add_term(&mut self, weight: Vec<i64>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(weight);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get() + coeff;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The sum of all coefficients; the dimension when this is a character.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, weight: &[i64]) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    /// Canonical serialized form: terms sorted lexicographically by weight.
    pub fn to_json(&self) -> Vec<CharacterTermJson> {
        self.terms
            .iter()
            .map(|(w, c)| CharacterTermJson {
                weight: w.clone(),
                coeff: *c,
            })
            .collect()
    }
}

impl Add<&WeightPolynomial> for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn add(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }
}

impl Mul<&WeightPolynomial> for &WeightPolynomial {
    type Output = WeightPolynomial;
    // Multiplying monomials adds their exponent vectors.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        let mut out = WeightPolynomial::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let sum: Vec<i64> = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                out.add_term(sum, c1 * c2);
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct CharacterTermJson {
    pub weight: Vec<i64>,
    pub coeff: i64,
}

/// The isobaric divided-difference operator `D_i`, extended additively from
/// its action on a monomial `e^λ` with `m = ⟨λ, α_i∨⟩`:
/// the geometric string `Σ_{t=0}^{m} e^{λ − t α_i}` when `m >= 0`, zero when
/// `m = −1`, and `−Σ_{t=1}^{−m−1} e^{λ + t α_i}` when `m <= −2`.
pub fn demazure_op(cm: &CartanMatrix, f: &WeightPolynomial, i: usize) -> WeightPolynomial {
    let alpha: Vec<i64> = cm.simple_root(i).to_ints();
    let mut out = WeightPolynomial::zero();
    for (w, c) in f.terms() {
        let m = w[i - 1];
        if m >= 0 {
            for t in 0..=m {
                let shifted: Vec<i64> = w.iter().zip(&alpha).map(|(a, b)| a - t * b).collect();
                out.add_term(shifted, *c);
            }
        } else if m <= -2 {
            for t in 1..=(-m - 1) {
                let shifted: Vec<i64> = w.iter().zip(&alpha).map(|(a, b)| a + t * b).collect();
                out.add_term(shifted, -c);
            }
        }
    }
    out
}

/// The nested Demazure character `D_{i_1}(e^{λ_1} · D_{i_2}(e^{λ_2} · ⋯))`.
/// Its coefficient sum is the oracle dimension.
pub fn generalized_demazure_character(cube: &TwistedCube) -> WeightPolynomial {
    let cm = cube.cartan();
    let n = cube.n();
    let mut acc = WeightPolynomial::monomial(vec![0; cm.rank()]);
    for k in (1..=n).rev() {
        let lam = WeightPolynomial::monomial(cube.lambda(k).to_ints());
        acc = demazure_op(cm, &(&lam * &acc), cube.beta_index(k));
    }
    acc
}

/// `Σ_{π ∈ T} e^{wt(π)}`.
pub fn path_character(ts: &TableauSet) -> WeightPolynomial {
    let mut out = WeightPolynomial::zero();
    for w in ts.weights() {
        out.add_term(w.to_ints(), 1);
    }
    out
}

/// `Σ_{x ∈ P ∩ Z^n} e^{Σ_j m_j ϖ_{β_j} − Σ_j x_j β_j}`.
pub fn cube_character(cube: &TwistedCube) -> WeightPolynomial {
    let rank = cube.cartan().rank();
    let mut top = Weight::zero(rank);
    for j in 1..=cube.n() {
        top = &top + &cube.lambda(j);
    }
    let betas: Vec<Vec<i64>> = (1..=cube.n()).map(|j| cube.beta(j).to_ints()).collect();
    let top = top.to_ints();
    let mut out = WeightPolynomial::zero();
    for pt in cube.lattice_points() {
        let mut w = top.clone();
        for (x, beta) in pt.iter().zip(&betas) {
            for (wi, bi) in w.iter_mut().zip(beta) {
                *wi -= x * bi;
            }
        }
        out.add_term(w, 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{MultList, Word};
    use crate::tableaux::enumerate_tableaux;

    fn cube(ty: &str, word: &[usize], mults: &[i64]) -> TwistedCube {
        let cm = CartanMatrix::builtin(ty).unwrap();
        let rank = cm.rank();
        TwistedCube::new(
            cm,
            Word::new(word.to_vec(), rank).unwrap(),
            MultList::new(mults.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn demazure_strings() {
        let cm = CartanMatrix::builtin("A2").unwrap();
        let d1 = demazure_op(&cm, &WeightPolynomial::monomial(vec![1, 0]), 1);
        let mut expect = WeightPolynomial::monomial(vec![1, 0]);
        expect.add_term(vec![-1, 1], 1);
        assert_eq!(d1, expect);

        // ⟨λ, α_i∨⟩ = −1 kills the monomial.
        assert_eq!(
            demazure_op(&cm, &WeightPolynomial::monomial(vec![-1, 2]), 1),
            WeightPolynomial::zero()
        );

        let d = demazure_op(&cm, &WeightPolynomial::monomial(vec![2, 1]), 1);
        let mut expect = WeightPolynomial::monomial(vec![2, 1]);
        expect.add_term(vec![0, 2], 1);
        expect.add_term(vec![-2, 3], 1);
        assert_eq!(d, expect);
    }

    #[test]
    fn demazure_negative_case() {
        let cm = CartanMatrix::builtin("A2").unwrap();
        // m = -2: minus the interior string.
        let d = demazure_op(&cm, &WeightPolynomial::monomial(vec![-2, 1]), 1);
        let mut expect = WeightPolynomial::zero();
        expect.add_term(vec![0, 0], -1);
        assert_eq!(d, expect);
    }

    #[test]
    fn demazure_linear_idempotent() {
        let cm = CartanMatrix::builtin("G2").unwrap();
        let mut f = WeightPolynomial::monomial(vec![2, 1]);
        f.add_term(vec![0, 3], 2);
        f.add_term(vec![-1, 0], -1);
        for i in 1..=2 {
            let once = demazure_op(&cm, &f, i);
            assert_eq!(demazure_op(&cm, &once, i), once);
        }
        // Coefficient sum of a dominant string is ⟨λ, α_i∨⟩ + 1.
        let g = demazure_op(&cm, &WeightPolynomial::monomial(vec![3, 0]), 1);
        assert_eq!(g.coefficient_sum(), 4);
    }

    #[test]
    fn oracle_dimensions() {
        for m in 0..5i64 {
            let ch = generalized_demazure_character(&cube("A1", &[1], &[m]));
            assert_eq!(ch.coefficient_sum(), m + 1);
            assert_eq!(ch.num_terms(), (m + 1) as usize);
        }
        assert_eq!(
            generalized_demazure_character(&cube("A2", &[1, 2, 1], &[1, 1, 1])).coefficient_sum(),
            13
        );
        assert_eq!(
            generalized_demazure_character(&cube("A2", &[1, 2, 1], &[2, 1, 1])).coefficient_sum(),
            18
        );
    }

    #[test]
    fn three_way_character_agreement() {
        for c in [
            cube("A1", &[1], &[3]),
            cube("A2", &[1, 2, 1], &[1, 1, 1]),
            cube("A2", &[1, 2, 1], &[2, 1, 1]),
        ] {
            let demazure = generalized_demazure_character(&c);
            let from_paths = path_character(&enumerate_tableaux(&c));
            let from_cube = cube_character(&c);
            assert_eq!(from_paths, demazure);
            assert_eq!(from_cube, demazure);
        }
    }

    #[test]
    fn path_character_matches_oracle_without_condition_p() {
        let c = cube("A2", &[1, 2, 1], &[0, 1, 1]);
        assert_eq!(
            path_character(&enumerate_tableaux(&c)),
            generalized_demazure_character(&c)
        );
    }

    #[test]
    fn character_json_sorted() {
        let ch = generalized_demazure_character(&cube("A1", &[1], &[2]));
        let json = ch.to_json();
        assert_eq!(json.len(), 3);
        let weights: Vec<&Vec<i64>> = json.iter().map(|t| &t.weight).collect();
        let mut sorted = weights.clone();
        sorted.sort();
        assert_eq!(weights, sorted);
        assert!(json.iter().all(|t| t.coeff == 1));
    }

    #[test]
    fn group_algebra_ops() {
        let e = |w: &[i64]| WeightPolynomial::monomial(w.to_vec());
        let sum = &e(&[1, 0]) + &e(&[1, 0]);
        assert_eq!(sum.coefficient(&[1, 0]), 2);
        let prod = &e(&[1, 0]) * &e(&[0, 1]);
        assert_eq!(prod, e(&[1, 1]));
        let mut cancel = e(&[1, 0]);
        cancel.add_term(vec![1, 0], -1);
        assert_eq!(cancel, WeightPolynomial::zero());
        assert_eq!(cancel.num_terms(), 0);
    }
}
