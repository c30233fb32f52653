//! The twisted-cube polytope `P(i, m)` cut out by `0 <= x_k <= A_k(x_{k+1},…,x_n)`:
//! bound functions, lattice-point enumeration, exact vertex enumeration,
//! the condition (P) decision, dilation, and coordinate reversal.

// Index-form loops are clearer than iterator chains in the in-place
// elimination code below.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use crate::rat::{self, Rat};
use crate::rootsys::{CartanMatrix, MultList, Weight, Word};
use crate::Error;

/// A word/multiplicity pair over a fixed Cartan matrix, read as the polytope
/// `P(i, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedCube {
    cartan: CartanMatrix,
    word: Word,
    mults: MultList,
}

impl TwistedCube {
    pub fn new(cartan: CartanMatrix, word: Word, mults: MultList) -> Result<Self, Error> {
        if word.len() != mults.len() {
            return Err(Error::LengthMismatch {
                word_len: word.len(),
                mult_len: mults.len(),
            });
        }
        Ok(TwistedCube {
            cartan,
            word,
            mults,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn mults(&self) -> &MultList {
        &self.mults
    }

    /// The ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// The letter `i_k` of the word, 1-based.
    pub fn beta_index(&self, k: usize) -> usize {
        self.word.letter(k)
    }

    /// The simple root `β_k = α_{i_k}`.
    pub fn beta(&self, k: usize) -> Weight {
        self.cartan.simple_root(self.word.letter(k))
    }

    /// The weight `λ_k = m_k ϖ_{i_k}`.
    pub fn lambda(&self, k: usize) -> Weight {
        Weight::fundamental(self.cartan.rank(), self.word.letter(k), self.mults.mult(k))
    }

    /// The suffix cube `P(i[k], m[k])` on coordinates `(x_k, …, x_n)`.
    pub fn suffix(&self, k: usize) -> TwistedCube {
        assert!(
            (1..=self.n() + 1).contains(&k),
            "suffix index {} out of range",
            k
        );
        TwistedCube {
            cartan: self.cartan.clone(),
            word: self.word.suffix(k),
            mults: self.mults.suffix(k),
        }
    }

    /// The cube with multiplicities `r·m`; its polytope is the `r`-fold
    /// dilation of this one.
    pub fn scaled(&self, r: i64) -> TwistedCube {
        assert!(r >= 1, "dilation factor must be >= 1");
        TwistedCube {
            cartan: self.cartan.clone(),
            word: self.word.clone(),
            mults: self.mults.scaled(r),
        }
    }

    /// `A_k(x_{k+1}, …, x_n)` by its defining pairing
    /// `⟨ Σ_{j≥k} m_j ϖ_{β_j} − Σ_{j>k} x_j β_j, β_k∨ ⟩`.
    pub fn bound_a(&self, k: usize, suffix: &[Rat]) -> Rat {
        let n = self.n();
        assert!(
            (1..=n).contains(&k),
            "bound index {} out of range 1..={}",
            k,
            n
        );
        assert_eq!(suffix.len(), n - k, "suffix length mismatch for A_{}", k);
        let mut acc = Weight::zero(self.cartan.rank());
        for j in k..=n {
            acc = &acc + &self.lambda(j);
        }
        for (offset, x) in suffix.iter().enumerate() {
            let j = k + 1 + offset;
            acc = &acc - &self.beta(j).scale(x);
        }
        self.cartan.pairing(&acc, self.beta_index(k))
    }

    /// `A_k` by the closed form: `m_k` plus `(m_j − 2x_j)` over later equal
    /// letters minus `x_j ⟨β_j, β_k∨⟩` over later adjacent letters.
    pub fn bound_a_closed(&self, k: usize, suffix: &[Rat]) -> Rat {
        let n = self.n();
        assert!(
            (1..=n).contains(&k),
            "bound index {} out of range 1..={}",
            k,
            n
        );
        assert_eq!(suffix.len(), n - k, "suffix length mismatch for A_{}", k);
        let ik = self.beta_index(k);
        let mut acc = rat::rat(self.mults.mult(k));
        for (offset, x) in suffix.iter().enumerate() {
            let j = k + 1 + offset;
            let ij = self.beta_index(j);
            if ij == ik {
                acc += rat::rat(self.mults.mult(j)) - x * rat::rat(2);
            } else if self.cartan.entry(ik, ij) < 0 {
                acc -= x * rat::rat(self.cartan.entry(ik, ij));
            }
        }
        acc
    }

    /// All lattice points of `P(i, m)`, in ascending lexicographic order.
    /// Back-to-front recursion pruning branches with a negative bound.
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut out = Vec::new();
        let mut suffix: Vec<i64> = Vec::new();
        self.enumerate_rec(n, &mut suffix, &mut out);
        out.sort();
        out
    }

    fn enumerate_rec(&self, k: usize, suffix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        // `suffix` holds (x_{k+1}, …, x_n) in reverse (x_n first).
        if k == 0 {
            let mut pt: Vec<i64> = suffix.clone();
            pt.reverse();
            out.push(pt);
            return;
        }
        let rats: Vec<Rat> = suffix.iter().rev().map(|&x| rat::rat(x)).collect();
        let bound = self.bound_a(k, &rats);
        if bound < Rat::zero() {
            return;
        }
        for x in 0..=rat::floor(&bound) {
            suffix.push(x);
            self.enumerate_rec(k - 1, suffix, out);
            suffix.pop();
        }
    }

    /// Exact membership: all `2n` inequalities hold.
    pub fn contains(&self, pt: &[Rat]) -> bool {
        let n = self.n();
        assert_eq!(pt.len(), n, "point dimension mismatch");
        for k in 1..=n {
            let x = pt[k - 1];
            if x < Rat::zero() || x > self.bound_a(k, &pt[k..]) {
                return false;
            }
        }
        true
    }

    /// The `2n` half-spaces `coeffs · x <= rhs` cutting out the polytope,
    /// listed as (lower, upper) per coordinate.
    pub fn inequalities(&self) -> Vec<(Vec<Rat>, Rat)> {
        let n = self.n();
        let mut rows = Vec::with_capacity(2 * n);
        for k in 1..=n {
            let mut lower = vec![Rat::zero(); n];
            lower[k - 1] = rat::rat(-1);
            rows.push((lower, Rat::zero()));

            // x_k <= A_k rewritten as x_k + Σ_{j>k} C[i_k][i_j] x_j <= Σ_{j>=k, i_j=i_k} m_j.
            let ik = self.beta_index(k);
            let mut upper = vec![Rat::zero(); n];
            upper[k - 1] = rat::rat(1);
            let mut rhs = Rat::zero();
            for j in k..=n {
                if self.beta_index(j) == ik {
                    rhs += rat::rat(self.mults.mult(j));
                }
                if j > k {
                    upper[j - 1] = rat::rat(self.cartan.entry(ik, self.beta_index(j)));
                }
            }
            rows.push((upper, rhs));
        }
        rows
    }

    /// Exact vertex enumeration: every feasible basic solution of an `n`-subset
    /// of the `2n` affine constraints, deduplicated and sorted.
    pub fn vertices(&self) -> Vec<Vec<Rat>> {
        let n = self.n();
        if n == 0 {
            return vec![vec![]];
        }
        let rows = self.inequalities();
        let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for combo in (0..rows.len()).combinations(n) {
            let a: Vec<Vec<Rat>> = combo.iter().map(|&i| rows[i].0.clone()).collect();
            let b: Vec<Rat> = combo.iter().map(|&i| rows[i].1).collect();
            if let Some(x) = solve_square(a, b) {
                if self.contains(&x) {
                    seen.insert(x);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// True iff every vertex is integral.
    pub fn is_lattice_polytope(&self) -> bool {
        self.vertices()
            .iter()
            .all(|v| v.iter().all(rat::is_integer))
    }

    /// The exact minimum of the affine function `A_k` over the real suffix
    /// region `P(i[k+1], m[k+1])`, or `None` if that region is empty. The
    /// region is convex so the minimum sits at a vertex.
    pub fn min_bound_over_suffix(&self, k: usize) -> Option<Rat> {
        let n = self.n();
        assert!(
            (1..n).contains(&k),
            "index {} out of range 1..={}",
            k,
            n - 1
        );
        let suffix_cube = self.suffix(k + 1);
        let verts = suffix_cube.vertices();
        verts.iter().map(|v| self.bound_a(k, v)).min()
    }

    /// Condition (P): `m_n >= 0` and `A_k >= 0` over the whole real suffix
    /// region, for every `k < n`. Empty suffix regions pass vacuously.
    pub fn condition_p(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        if self.mults.mult(n) < 0 {
            return false;
        }
        (1..n).all(|k| match self.min_bound_over_suffix(k) {
            None => true,
            Some(min) => min >= Rat::zero(),
        })
    }

    /// The polytope serialization, optionally in reversed coordinate order.
    pub fn polytope_json(&self, opposite: bool) -> PolytopeJson {
        let maybe_rev_rat = |v: Vec<Rat>| if opposite { reversed(&v) } else { v };
        let maybe_rev_int = |v: Vec<i64>| if opposite { reversed(&v) } else { v };
        let inequalities = self
            .inequalities()
            .into_iter()
            .map(|(coeffs, rhs)| InequalityJson {
                coeffs: maybe_rev_rat(coeffs).iter().map(rat::to_string).collect(),
                rhs: rat::to_string(&rhs),
                sense: "<=".to_string(),
            })
            .collect();
        let mut vertices: Vec<Vec<Rat>> = self.vertices().into_iter().map(maybe_rev_rat).collect();
        vertices.sort();
        let mut lattice_points: Vec<Vec<i64>> = self
            .lattice_points()
            .into_iter()
            .map(maybe_rev_int)
            .collect();
        lattice_points.sort();
        PolytopeJson {
            n: self.n(),
            inequalities,
            vertices: vertices
                .iter()
                .map(|v| v.iter().map(rat::to_string).collect())
                .collect(),
            lattice_points,
            is_lattice: self.is_lattice_polytope(),
            condition_p: self.condition_p(),
        }
    }

    /// H-representation text: one `c_1 … c_n <= rhs` line per inequality.
    pub fn hrep(&self, opposite: bool) -> String {
        let mut out = String::new();
        for (coeffs, rhs) in self.inequalities() {
            let coeffs = if opposite { reversed(&coeffs) } else { coeffs };
            let parts: Vec<String> = coeffs.iter().map(rat::to_string).collect();
            out.push_str(&parts.join(" "));
            out.push_str(" <= ");
            out.push_str(&rat::to_string(&rhs));
            out.push('\n');
        }
        out
    }
}

/// Reverses a coordinate vector (the `op` ordering).
pub fn reversed<T: Clone>(v: &[T]) -> Vec<T> {
    v.iter().rev().cloned().collect()
}

/// Exact solve of a square rational system; `None` when singular.
pub fn solve_square(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col];
        for entry in a[col].iter_mut() {
            *entry /= p;
        }
        b[col] /= p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                for c in 0..n {
                    let v = a[col][c] * factor;
                    a[r][c] -= v;
                }
                let v = b[col] * factor;
                b[r] -= v;
            }
        }
    }
    Some(b)
}

#[derive(Debug, Serialize)]
pub struct InequalityJson {
    pub coeffs: Vec<String>,
    pub rhs: String,
    pub sense: String,
}

#[derive(Debug, Serialize)]
pub struct PolytopeJson {
    pub n: usize,
    pub inequalities: Vec<InequalityJson>,
    pub vertices: Vec<Vec<String>>,
    pub lattice_points: Vec<Vec<i64>>,
    pub is_lattice: bool,
    #[serde(rename = "condition_P")]
    pub condition_p: bool,
}
