//! Standard tableaux as iterated lowerings of concatenated straight dominant
//! paths: enumeration, the maps tying lattice points of the twisted cube to
//! tableaux, and the condition (P') decision.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cube::TwistedCube;
use crate::paths::{MaybePath, Path};
use crate::rootsys::Weight;

/// The deduplicated set of standard tableaux of shape `(i, m)`, each with one
/// witness exponent vector. Distinct exponent vectors can produce the same
/// path when condition (P) fails, so identity is canonical path equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauSet {
    entries: BTreeMap<Path, Vec<u64>>,
}

impl TableauSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.entries.contains_key(p)
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.entries.keys()
    }

    /// Endpoint multiset, sorted.
    pub fn weights(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> = self.entries.keys().map(Path::weight).collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> Vec<TableauJson> {
        self.entries
            .iter()
            .map(|(path, exps)| TableauJson {
                breakpoints: path
                    .breakpoints()
                    .iter()
                    .map(|b| b.coords().iter().map(crate::rat::to_string).collect())
                    .collect(),
                weight: path.weight().to_ints(),
                exponents: exps.clone(),
            })
            .collect()
    }
}

#[derive(Debug, Serialize)]
pub struct TableauJson {
    pub breakpoints: Vec<Vec<String>>,
    pub weight: Vec<i64>,
    pub exponents: Vec<u64>,
}

/// `τ_k(x_{k+1},…,x_n) = π^{λ_k} ⋆ φ_{k+1}(x_{k+1},…,x_n)`, with
/// `τ_n = π^{λ_n}`. A null inner value propagates to null.
pub fn tau(cube: &TwistedCube, k: usize, x_suffix: &[i64]) -> MaybePath {
    let n = cube.n();
    assert!((1..=n).contains(&k), "index {} out of range 1..={}", k, n);
    assert_eq!(
        x_suffix.len(),
        n - k,
        "suffix length mismatch for tau_{}",
        k
    );
    let head = Path::straight(&cube.lambda(k));
    if k == n {
        return MaybePath::Path(head);
    }
    match phi(cube, k + 1, x_suffix) {
        MaybePath::Null => MaybePath::Null,
        rest => MaybePath::Path(head).concat(&rest),
    }
}

/// `φ_k(x_k,…,x_n) = f_{β_k}^{x_k}(τ_k(x_{k+1},…,x_n))`; null propagates.
pub fn phi(cube: &TwistedCube, k: usize, x: &[i64]) -> MaybePath {
    let n = cube.n();
    assert!((1..=n).contains(&k), "index {} out of range 1..={}", k, n);
    assert_eq!(x.len(), n - k + 1, "exponent length mismatch for phi_{}", k);
    assert!(x.iter().all(|&v| v >= 0), "exponents must be non-negative");
    tau(cube, k, &x[1..]).lower_power(cube.cartan(), cube.beta_index(k), x[0] as u64)
}

/// Exhaustive recursive generation of `T(i, m)`. Each lowering loop is
/// bounded by the exact null threshold, and stages are deduplicated by
/// canonical path equality.
pub fn enumerate_tableaux(cube: &TwistedCube) -> TableauSet {
    let cm = cube.cartan();
    let n = cube.n();
    let mut stage: BTreeMap<Path, Vec<u64>> = BTreeMap::new();
    stage.insert(Path::trivial(cm.rank()), vec![]);
    for k in (1..=n).rev() {
        let beta = cube.beta_index(k);
        let head = Path::straight(&cube.lambda(k));
        let mut next: BTreeMap<Path, Vec<u64>> = BTreeMap::new();
        for (t, exps) in &stage {
            let base = head.concat(t);
            let bound = base.lower_threshold(cm, beta);
            let mut cur = MaybePath::Path(base);
            for x in 0..=bound as u64 {
                let p = cur.clone().unwrap();
                next.entry(p).or_insert_with(|| {
                    let mut e = vec![x];
                    e.extend(exps);
                    e
                });
                cur = cur.lower(cm, beta);
            }
            debug_assert!(cur.is_null());
        }
        stage = next;
    }
    TableauSet { entries: stage }
}

/// Condition (P'): `e_{β_k}(τ_k)` is null for every lattice point of the cube
/// and every position `k`.
pub fn condition_p_prime(cube: &TwistedCube) -> bool {
    let cm = cube.cartan();
    let n = cube.n();
    for pt in cube.lattice_points() {
        for k in 1..=n {
            if !tau(cube, k, &pt[k..])
                .raise(cm, cube.beta_index(k))
                .is_null()
            {
                return false;
            }
        }
    }
    true
}

/// Diagnostic comparison of `φ_1 : P(i,m) ∩ Z^n → T(i,m)`.
#[derive(Debug, Serialize)]
pub struct BijectionReport {
    pub lattice_count: usize,
    pub tableau_count: usize,
    pub all_images_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    pub counterexample: Option<String>,
}

/// Runs `φ_1` over every lattice point and compares the image with the full
/// tableau enumeration. Failures are reported, not raised.
pub fn verify_bijection(cube: &TwistedCube) -> BijectionReport {
    let points = cube.lattice_points();
    let tableaux = enumerate_tableaux(cube);
    let mut image: BTreeMap<Path, Vec<i64>> = BTreeMap::new();
    let mut all_images_defined = true;
    let mut injective = true;
    let mut counterexample = None;
    for pt in &points {
        match phi(cube, 1, pt) {
            MaybePath::Null => {
                all_images_defined = false;
                counterexample.get_or_insert_with(|| format!("phi_1({:?}) is null", pt));
            }
            MaybePath::Path(p) => {
                if let Some(prev) = image.insert(p, pt.clone()) {
                    injective = false;
                    counterexample
                        .get_or_insert_with(|| format!("phi_1 collision: {:?} and {:?}", prev, pt));
                }
            }
        }
    }
    let surjective = tableaux.paths().all(|p| image.contains_key(p))
        && image.keys().all(|p| tableaux.contains(p));
    if !surjective && counterexample.is_none() {
        counterexample = Some("phi_1 image differs from the tableau set".to_string());
    }
    let bijective = all_images_defined && injective && surjective && points.len() == tableaux.len();
    BijectionReport {
        lattice_count: points.len(),
        tableau_count: tableaux.len(),
        all_images_defined,
        injective,
        surjective,
        bijective,
        counterexample,
    }
}
