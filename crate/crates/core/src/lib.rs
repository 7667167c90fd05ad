//! Boundary words of grid polyominoes and the algebra of double squares.
//!
//! A polyomino that tiles the plane by translation in two distinct ways as
//! a square tile carries exactly two factorizations of its boundary word of
//! the shape A·B·hat(A)·hat(B). This crate models the boundary-word algebra
//! behind that statement: the four-letter step alphabet and its involutions
//! ([`word`]), validated boundary words and their geometry ([`polyomino`]),
//! square and hexagon factorizations together with the structural
//! decomposition of double squares ([`bn`]), the morphisms along which
//! double squares reduce to smaller ones and the primality test built on
//! them ([`morphism`]), and exhaustive catalogs with a verdict on the
//! couple-freeness conjecture at a given perimeter bound ([`catalog`]).
//!
//! ```
//! use tileforge::polyomino::BoundaryWord;
//! use tileforge::morphism::is_prime;
//!
//! let cross = BoundaryWord::validate(&"121010303232".parse().unwrap()).unwrap();
//! assert!(is_prime(&cross).unwrap());
//! ```

pub mod bn;
pub mod catalog;
pub mod morphism;
pub mod polyomino;
pub mod word;

pub use bn::{
    as_double_square, build_from_form, classify_form, find_hexagon_factorizations,
    find_square_factorizations, BnError, DoubleSquareStructure, FormClassification, FormParams,
    FormTag, HexFactorization, SquareFactorization,
};
pub use catalog::{
    enumerate_bruteforce, enumerate_parametric, verify_conjecture, Catalog, CatalogEntry,
    CatalogError, ConjectureReport, DedupMode, PerimeterRow,
};
pub use morphism::{
    compose, find_preimages, is_prime, trivial_morphism, FactorizationChoice, HomologousMorphism,
    MorphismError, Preimage,
};
pub use polyomino::{tiling_patch, BoundaryWord, CellSet, PolyominoError};
pub use word::{rotation_equivalent, CircularWord, Step, Word, WordError};
