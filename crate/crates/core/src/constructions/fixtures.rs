//! Two fixed pairs of simplex codes with no projective common neighbour.
//!
//! The generator matrices are stored verbatim in `data/` and parsed at run
//! time; nothing here is computed.

use crate::gf::Elem;
use crate::linalg::{parse_matrices, Matrix, Subspace};

use super::{ConstructionPair, Provenance};

pub const BINARY_15_4_TEXT: &str = include_str!("../../data/binary_15_4.txt");
pub const TERNARY_13_3_TEXT: &str = include_str!("../../data/ternary_13_3.txt");

/// The binary [15,4] pair X = L1 + L2, Y = L2 + L3.
#[derive(Clone, Debug)]
pub struct BinaryFixture {
    pub pair: ConstructionPair,
    /// L1, L2, L3 as printed: rows a, b, a + b.
    pub layer_matrices: [Matrix; 3],
    pub layers: [Subspace; 3],
}

/// The ternary [13,3] pair sharing the row w, with the 16 subspaces
/// adjacent to both, in the order (v, u) for v in v1, v2, v1+v2, v1+2v2 and
/// u in u1, u2, u1+u2, u1+2u2.
#[derive(Clone, Debug)]
pub struct TernaryFixture {
    pub pair: ConstructionPair,
    pub w: Vec<Elem>,
    pub candidates: Vec<Matrix>,
}

fn load(text: &str) -> Vec<Matrix> {
    parse_matrices(text).expect("bundled fixture parses")
}

fn pair(gen_x: Matrix, gen_y: Matrix, expected_meet: usize, provenance: Provenance) -> ConstructionPair {
    ConstructionPair {
        x: Subspace::span(&gen_x),
        y: Subspace::span(&gen_y),
        n: gen_x.cols(),
        k: gen_x.rows(),
        q: gen_x.field().q(),
        gen_x,
        gen_y,
        expected_meet,
        provenance,
    }
}

pub fn binary_fixture() -> BinaryFixture {
    let mut m = load(BINARY_15_4_TEXT).into_iter();
    let mut next = || m.next().expect("five matrices");
    let layer_matrices = [next(), next(), next()];
    let layers = layer_matrices.clone().map(|l| Subspace::span(&l));
    BinaryFixture {
        pair: pair(next(), next(), 2, Provenance::FixtureBinary),
        layer_matrices,
        layers,
    }
}

pub fn fixture_binary_15_4() -> ConstructionPair {
    binary_fixture().pair
}

pub fn fixture_ternary_13_3() -> TernaryFixture {
    let mut all = load(TERNARY_13_3_TEXT);
    let candidates = all.split_off(2);
    let gen_y = all.pop().expect("Y");
    let gen_x = all.pop().expect("X");
    TernaryFixture {
        w: gen_x.row(0).to_vec(),
        pair: pair(gen_x, gen_y, 1, Provenance::FixtureTernary),
        candidates,
    }
}
