//! Cartan-matrix root-system arithmetic: weights in the fundamental-weight
//! basis, pairings with coroots, simple reflections, and word reducedness.
//!
//! Convention: `C[i][j] = ⟨α_j, α_i∨⟩`, so column `j` of the Cartan matrix is
//! the simple root `α_j` written in fundamental-weight coordinates. All root
//! and letter indices in the public API are 1-based, matching the usual
//! labelling of Dynkin diagrams.

// Index-form loops are clearer than iterator chains in the in-place
// elimination and matrix-building code below.
#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::rat::{self, Rat};
use crate::Error;

/// A finite-type generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    rank: usize,
    #[serde(rename = "matrix")]
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates the Cartan axioms and the finite-type condition
    /// (positive-definite symmetrization).
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, Error> {
        let rank = entries.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if entries.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..rank {
            if entries[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry C[{}][{}] = {} (must be 2)",
                    i + 1,
                    i + 1,
                    entries[i][i]
                )));
            }
            for j in 0..rank {
                if i != j {
                    if entries[i][j] > 0 {
                        return Err(Error::InvalidCartan(format!(
                            "off-diagonal entry C[{}][{}] = {} (must be <= 0)",
                            i + 1,
                            j + 1,
                            entries[i][j]
                        )));
                    }
                    if (entries[i][j] == 0) != (entries[j][i] == 0) {
                        return Err(Error::InvalidCartan(format!(
                            "zero pattern not symmetric at ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        let cm = CartanMatrix { rank, entries };
        cm.check_finite_type()?;
        Ok(cm)
    }

    /// A built-in matrix by name: `"A1"`..`"A9"`, `"B2"`.., `"C2"`.., `"D3"`..,
    /// `"E6"`, `"E7"`, `"E8"`, `"F4"`, `"G2"`.
    pub fn builtin(name: &str) -> Result<Self, Error> {
        let err = || Error::UnknownType(name.to_string());
        let (family, rank_str) = name.split_at(1);
        let rank: usize = rank_str.parse().map_err(|_| err())?;
        let entries = match (family, rank) {
            ("A", r) if r >= 1 => chain_matrix(r, &[]),
            // B: last simple root short; C: last simple root long.
            ("B", r) if r >= 2 => chain_matrix(r, &[(r - 1, r, -1, -2)]),
            ("C", r) if r >= 2 => chain_matrix(r, &[(r - 1, r, -2, -1)]),
            ("D", r) if r >= 3 => {
                let mut m = chain_matrix(r - 1, &[]);
                extend_with_node(&mut m, r - 2);
                m
            }
            ("E", r) if (6..=8).contains(&r) => {
                // Bourbaki numbering: chain 1-3-4-5-..-r with node 2 on node 4.
                let mut m = vec![vec![0i64; r]; r];
                for i in 0..r {
                    m[i][i] = 2;
                }
                let chain: Vec<usize> = std::iter::once(0).chain(2..r).collect();
                for w in chain.windows(2) {
                    m[w[0]][w[1]] = -1;
                    m[w[1]][w[0]] = -1;
                }
                m[1][3] = -1;
                m[3][1] = -1;
                m
            }
            ("F", 4) => chain_matrix(4, &[(2, 3, -1, -2)]),
            ("G", 2) => vec![vec![2, -1], vec![-3, 2]],
            _ => return Err(err()),
        };
        CartanMatrix::new(entries)
    }

    /// Parses the Cartan file format `{"rank": r, "matrix": [[..]]}`.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let raw: CartanMatrix =
            serde_json::from_str(text).map_err(|e| Error::InvalidCartan(e.to_string()))?;
        if raw.entries.len() != raw.rank {
            return Err(Error::InvalidCartan(format!(
                "declared rank {} does not match matrix size {}",
                raw.rank,
                raw.entries.len()
            )));
        }
        CartanMatrix::new(raw.entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `C[i][j] = ⟨α_j, α_i∨⟩`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.check_index(i);
        self.check_index(j);
        self.entries[i - 1][j - 1]
    }

    fn check_index(&self, j: usize) {
        assert!(
            (1..=self.rank).contains(&j),
            "root index {} out of range 1..={}",
            j,
            self.rank
        );
    }

    /// `⟨lam, α_j∨⟩`; an exact coordinate read in the ϖ basis.
    pub fn pairing(&self, lam: &Weight, j: usize) -> Rat {
        self.check_index(j);
        assert_eq!(lam.coords.len(), self.rank, "weight rank mismatch");
        lam.coords[j - 1]
    }

    /// The simple root `α_j` in fundamental-weight coordinates (column `j`).
    pub fn simple_root(&self, j: usize) -> Weight {
        self.check_index(j);
        Weight::new(
            (1..=self.rank)
                .map(|i| rat::rat(self.entries[i - 1][j - 1]))
                .collect(),
        )
    }

    /// The simple reflection `s_j(λ) = λ − ⟨λ, α_j∨⟩ α_j`.
    pub fn reflect(&self, lam: &Weight, j: usize) -> Weight {
        let c = self.pairing(lam, j);
        lam - &self.simple_root(j).scale(&c)
    }

    /// Writes a ϖ-basis weight in the simple-root basis (inverse Cartan solve).
    pub fn to_root_basis(&self, lam: &Weight) -> Vec<Rat> {
        assert_eq!(lam.coords.len(), self.rank);
        // Exact Gaussian elimination on the augmented system C x = lam.
        let n = self.rank;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| rat::rat(self.entries[i][j]))
                    .chain(std::iter::once(lam.coords[i]))
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("finite-type Cartan matrix is invertible");
            a.swap(col, pivot);
            let p = a[col][col];
            for entry in a[col].iter_mut() {
                *entry /= p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col];
                    for c in col..=n {
                        let v = a[col][c] * factor;
                        a[r][c] -= v;
                    }
                }
            }
        }
        (0..n).map(|i| a[i][n]).collect()
    }

    /// True iff the product `s_{i_1} ⋯ s_{i_n}` has Coxeter length `n`.
    ///
    /// Uses the positive-root criterion: the length increases at step `k`
    /// iff `s_{i_1} ⋯ s_{i_{k-1}} (α_{i_k})` is a positive root.
    pub fn is_reduced(&self, word: &Word) -> bool {
        for k in 0..word.len() {
            let mut mu = self.simple_root(word.letter(k + 1));
            for pos in (0..k).rev() {
                mu = self.reflect(&mu, word.letter(pos + 1));
            }
            let root_coords = self.to_root_basis(&mu);
            if root_coords.iter().any(|c| c < &Rat::zero()) {
                return false;
            }
        }
        true
    }

    /// Finds a positive diagonal symmetrizer and checks positive definiteness
    /// of the symmetrized matrix via leading principal minors.
    fn check_finite_type(&self) -> Result<(), Error> {
        let n = self.rank;
        let mut d: Vec<Option<Rat>> = vec![None; n];
        // Propagate the symmetrizer over each connected component.
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(rat::rat(1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let di = d[i].unwrap();
                for j in 0..n {
                    if i != j && self.entries[i][j] != 0 {
                        let dj = di * Rat::new(self.entries[i][j], self.entries[j][i]);
                        match d[j] {
                            None => {
                                d[j] = Some(dj);
                                stack.push(j);
                            }
                            Some(existing) if existing != dj => {
                                return Err(Error::InvalidCartan(
                                    "matrix is not symmetrizable".into(),
                                ));
                            }
                            Some(_) => {}
                        }
                    }
                }
            }
        }
        let d: Vec<Rat> = d.into_iter().map(Option::unwrap).collect();
        let mut s: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| d[i] * rat::rat(self.entries[i][j]))
                    .collect()
            })
            .collect();
        // Leading principal minors of the symmetrization must all be positive;
        // fraction-free elimination keeps the pivots as minor ratios.
        for col in 0..n {
            if s[col][col] <= Rat::zero() {
                return Err(Error::InvalidCartan(
                    "symmetrization is not positive definite (not finite type)".into(),
                ));
            }
            for r in col + 1..n {
                let factor = s[r][col] / s[col][col];
                for c in col..n {
                    let v = s[col][c] * factor;
                    s[r][c] -= v;
                }
            }
        }
        Ok(())
    }
}

/// A simply-laced chain (type A) matrix with entry overrides
/// `(i, j, C[i][j], C[j][i])`, 1-based.
fn chain_matrix(r: usize, overrides: &[(usize, usize, i64, i64)]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; r]; r];
    for i in 0..r {
        m[i][i] = 2;
        if i + 1 < r {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    for &(i, j, cij, cji) in overrides {
        m[i - 1][j - 1] = cij;
        m[j - 1][i - 1] = cji;
    }
    m
}

/// Appends one node with a single simply-laced edge to node `attach` (1-based).
fn extend_with_node(m: &mut Vec<Vec<i64>>, attach: usize) {
    let r = m.len();
    for (i, row) in m.iter_mut().enumerate() {
        row.push(if i + 1 == attach { -1 } else { 0 });
    }
    let mut new_row = vec![0i64; r + 1];
    new_row[attach - 1] = -1;
    new_row[r] = 2;
    m.push(new_row);
}

/// An element of the rational weight space, stored in the ϖ basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    /// `m · ϖ_j` for the given rank.
    pub fn fundamental(rank: usize, j: usize, m: i64) -> Self {
        assert!(
            (1..=rank).contains(&j),
            "root index {} out of range 1..={}",
            j,
            rank
        );
        let mut coords = vec![Rat::zero(); rank];
        coords[j - 1] = rat::rat(m);
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| rat::rat(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(rat::is_integer)
    }

    /// Integer coordinate vector; panics on a non-integral weight.
    pub fn to_ints(&self) -> Vec<i64> {
        self.coords.iter().map(rat::as_integer).collect()
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.coords.len(), rhs.coords.len(), "weight rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.coords.len(), rhs.coords.len(), "weight rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// A word `(i_1, …, i_n)` in the simple-reflection alphabet, 1-based letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self, Error> {
        for &l in &letters {
            if l == 0 || l > rank {
                return Err(Error::LetterOutOfRange { letter: l, rank });
            }
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letter `i_k`, 1-based position.
    pub fn letter(&self, k: usize) -> usize {
        self.letters[k - 1]
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// The suffix word `(i_k, …, i_n)`.
    pub fn suffix(&self, k: usize) -> Word {
        Word {
            letters: self.letters[k - 1..].to_vec(),
        }
    }
}

/// The multiplicity list `(m_1, …, m_n)` paired with a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultList {
    mults: Vec<i64>,
}

impl MultList {
    pub fn new(mults: Vec<i64>) -> Result<Self, Error> {
        if let Some(&m) = mults.iter().find(|&&m| m < 0) {
            return Err(Error::Parse(format!("multiplicity {} is negative", m)));
        }
        Ok(MultList { mults })
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// The multiplicity `m_k`, 1-based position.
    pub fn mult(&self, k: usize) -> i64 {
        self.mults[k - 1]
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn suffix(&self, k: usize) -> MultList {
        MultList {
            mults: self.mults[k - 1..].to_vec(),
        }
    }

    pub fn scaled(&self, r: i64) -> MultList {
        MultList {
            mults: self.mults.iter().map(|m| m * r).collect(),
        }
    }
}
