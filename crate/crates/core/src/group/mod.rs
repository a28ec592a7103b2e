//! Normal forms, arithmetic and ball enumeration for free groups and free
//! products of cyclic groups.

mod arith;
mod ball;
mod icc;
mod spec;
mod word;

pub use arith::{ball_cap_from_env, Contact, Group, BALL_CAP_ENV, DEFAULT_BALL_CAP};
pub use ball::{free_ball_size, Ball};
pub use icc::{is_icc, Icc, IccVerdict};
pub use spec::{GroupSpec, Order};
pub use word::{generator_name, Atom, Element};
