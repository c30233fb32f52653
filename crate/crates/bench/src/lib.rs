//! Shared fixtures for the benchmark suite.

use twistcube_core::cube::TwistedCube;
use twistcube_core::rootsys::{CartanMatrix, MultList, Word};

pub fn fixture(ty: &str, word: &[usize], mults: &[i64]) -> TwistedCube {
    let cm = CartanMatrix::builtin(ty).unwrap();
    let rank = cm.rank();
    TwistedCube::new(
        cm,
        Word::new(word.to_vec(), rank).unwrap(),
        MultList::new(mults.to_vec()).unwrap(),
    )
    .unwrap()
}
