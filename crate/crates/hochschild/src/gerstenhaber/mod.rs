//! Chain-level operator apparatus: cup, circ and cap products, the bullet
//! products and bracket on syzygy-valued cochains, star products on
//! tensor-power-valued cochains, generalized cap/cup against (A⊗A)^A, the
//! connecting map theta and the Connes boundary operator.

mod bullet;
mod classical;
mod star;
mod avee_ops;
mod connes;

pub use avee_ops::{cap_into_chain, generalized_cap, generalized_cup};
pub use bullet::{
    bracket_omega, bracket_with_mu, bullet, bullet_i, cup_omega, omega_delta, theta, OmegaCochain,
};
pub use classical::{cap, circ, circ_i, classical_bracket, cup_left, cup_right, unit_cochain};
pub use connes::connes_b_matrix;
pub use star::{cup_tensor, delta_tensor, delta_via_mu_star, star, star0, star1, star_bracket};
