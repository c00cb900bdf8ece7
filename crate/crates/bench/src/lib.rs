//! Inputs shared by the benchmarks.

use bicomlab_core::consequences::var_names;
use bicomlab_core::operators::{left_normed, BracketOp};
use bicomlab_core::BicomElement;

/// Left-normed anti-commutator on `x1..xn`, a dense symmetric element.
pub fn anti_left_normed(n: usize) -> BicomElement {
    left_normed(BracketOp::Anti, &var_names(n)).expect("n >= 2")
}

/// Left-normed commutator on `x1..xn`.
pub fn com_left_normed(n: usize) -> BicomElement {
    left_normed(BracketOp::Com, &var_names(n)).expect("n >= 2")
}
