pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod io;
pub mod koszul;
pub mod module;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod ring;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use frobenius::{
    frobenius_module, numerical_rigidity_check, psh_vanishing_check, rigidity_report, strong_rigidity_witness,
    tor_frobenius, FrobeniusPower, RigidityReport, RingAssumptions, WitnessVerdict,
};
pub use groebner::{buchberger, GroebnerIdeal, InitialIdeal};
pub use koszul::{chi, euler_data, koszul_complex, koszul_homology, lichtenbaum_check, prop43_check, ElementSequence, EulerData};
pub use module::{
    minimal_resolution, BettiTable, Budget, FreeComplex, GradedFreeModule, GradedMatrix, Length, ModuleOrder,
    PdVerdict, PresentedModule, Resolution,
};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{MonomialOrder, OrderKind};
pub use poly::Polynomial;
pub use quotient::QuotientRing;
pub use ring::PolyRing;
