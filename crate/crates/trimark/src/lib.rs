//! Isotopy classes of plane homeomorphisms preserving three marked points on
//! a line, computed through their images in `PSL₂(ℤ)`.
//!
//! - [`projmat`]: exact 2×2 integer matrices up to sign, mod-2 reduction.
//! - [`wordcalc`]: words in `A`, `B`, `Z`, `Y`, canonical forms,
//!   classification by trace, circulation codes, linking numbers.
//! - [`euclid`]: the remainder-in-`(0, q]` algorithm and characteristic
//!   sequences of coprime pairs.
//! - [`snailgeom`]: snail curves made of half circles, their colouring and
//!   SVG output.
//! - [`skeleton`]: crossing sequences of curves and their reduction.
//! - [`arrowtree`]: arrow substitutions and the inner two-coloured tree.
//!
//! ```
//! use trimark::wordcalc::{canonicalize, Word};
//!
//! let w: Word = "B A^2 Z B A^3 Z".parse().unwrap();
//! assert_eq!(canonicalize(&w).unwrap().to_string(), "B^2 A^2 Z");
//! ```

pub mod arrowtree;
pub mod euclid;
pub mod json;
pub mod projmat;
pub mod skeleton;
pub mod snailgeom;
pub mod wordcalc;
