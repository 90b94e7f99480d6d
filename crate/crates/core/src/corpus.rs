//! The shipped data files, embedded at compile time.

use crate::io::{parse_complex, parse_pair, ComplexDocument, PairDocument};

pub const POINCARE16: &str = include_str!("../data/poincare16.json");
pub const RP2_6: &str = include_str!("../data/rp2_6.json");
pub const CP2_PAIR: &str = include_str!("../data/cp2_pair.json");

/// `(file name, contents)` for every shipped file.
pub const FILES: [(&str, &str); 3] =
    [("poincare16.json", POINCARE16), ("rp2_6.json", RP2_6), ("cp2_pair.json", CP2_PAIR)];

pub fn lookup(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// 16-vertex triangulation of the Poincaré homology 3-sphere.
pub fn poincare16() -> ComplexDocument {
    parse_complex(POINCARE16).expect("shipped file parses")
}

/// Minimal 6-vertex triangulation of the real projective plane.
pub fn rp2_6() -> ComplexDocument {
    parse_complex(RP2_6).expect("shipped file parses")
}

pub fn cp2_pair() -> PairDocument {
    parse_pair(CP2_PAIR).expect("shipped file parses")
}
