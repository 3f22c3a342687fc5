//! Dual substitutions on stepped planes.
//!
//! Faces `[x, i]` of discrete planes, the dual maps `E1*(σ)` of unimodular
//! substitutions, the Brun and Jacobi-Perron families, covering and annulus
//! certificates, generation graphs, and Rauzy fractal approximations.
//!
//! Set-level computations are exact.  Normal vectors are generic over an
//! [`scalar::OrderedField`]; the aliases below name the usual choices.
//!
//! ```
//! use planegen::{brun_expansion, parse_vector, InputVector};
//!
//! let InputVector::Algebraic(v) = parse_vector("poly=x^3-3x^2-x+1;v=(1,x,x^2)").unwrap() else { panic!() };
//! let digits = brun_expansion(&v, 10).unwrap().digits;
//! assert_eq!(digits, vec![1, 1, 3, 1, 1, 3, 2, 1, 3, 2]);
//! ```

pub mod algebraic;
pub mod certificates;
pub mod covering;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod lp;
pub mod rauzy;
pub mod scalar;
pub mod substitution;
pub mod svg;

pub use error::{Error, Result};
pub use families::{brun_expansion, jp_expansion, Family, JpDigit};
pub use geometry::{Face, NormalVector, Pattern, Vec3};
pub use io::{parse_vector, InputVector};
pub use substitution::Substitution;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Exact element of a real number field.
pub type AlgebraicNumber = algebraic::Algebraic;
/// Normal vector with rational coordinates.
pub type RationalVector = NormalVector<Rational>;
/// Normal vector with exact algebraic coordinates.
pub type AlgebraicVector = NormalVector<AlgebraicNumber>;
/// Normal vector with double-precision coordinates.
pub type FloatVector = NormalVector<f64>;
