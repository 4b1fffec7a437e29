//! Finite fields `F_{p^k}`, polynomials over them, additive characters and
//! the cyclotomic value field `Q(zeta_p)`.

pub mod cyclo;
pub mod field;
pub mod poly;

pub use cyclo::{additive_character, CycloValue};
pub use field::{embedding, field_of_order, is_prime, make_field, prime_power, Field, FqElem, GaloisField};
pub use poly::Poly;
