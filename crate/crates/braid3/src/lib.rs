//! Exact-arithmetic invariants of 3-braid closures in band generators.
//!
//! The 3-braid group is taken with generators a1, a2, a3 subject to
//! a2 a1 = a3 a2 = a1 a3 (a1 = s1, a2 = s2, a3 = s1^-1 s2 s1 in Artin
//! generators). The crate provides:
//!
//! - band-generator words with rewriting, classification and enumeration
//!   ([`word`], [`classes`], [`enumerate`], [`rewrite`]);
//! - exact Laurent/Conway polynomial arithmetic ([`laurent`], [`conway`]);
//! - Alexander, Conway and Casson invariants of closures, linking numbers,
//!   and the crossing-change engine ([`burau`], [`invariants`]);
//! - verification campaigns over enumerated word families ([`verify`]).

pub mod burau;
pub mod classes;
pub mod conway;
pub mod enumerate;
pub mod invariants;
pub mod laurent;
pub mod perm;
pub mod rewrite;
pub mod verify;
pub mod word;

pub use classes::{classify, ClassReport, NormalForm};
pub use conway::ConwayPoly;
pub use enumerate::{enumerate_words, random_word, WordClass};
pub use invariants::{
    alexander, bennequin_genus, casson, linking_number, skein_check, surgery_casson,
    InvariantError, InvariantReport,
};
pub use laurent::{LaurentPoly, Mat2, PolyError};
pub use perm::{closure_info, ClosureInfo, Permutation3};
pub use word::{word, ArtinLetter, BraidWord, Syllable, WordError};
