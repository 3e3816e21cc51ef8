//! Binary linear codes attached to a graph: the cut space (row space of the
//! incidence matrix) and its orthogonal complement, the cycle space.

mod gf2;
mod krawtchouk;

pub use gf2::{
    cycle_space_basis, enumerate_codewords, enumerate_weight_distribution, gf2_rank,
    incidence_matrix, BitRow, Gf2Matrix,
};
pub use krawtchouk::{krawtchouk_table, macwilliams_dual_distribution, KrawtchoukTable};
