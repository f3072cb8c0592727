//! Exact symbolic reproduction of the Hodge diamond of an OG6-type manifold
//! from decomposition-theorem bookkeeping over `|2θ| ≅ P³`.
//!
//! * [`hodge`]: Grothendieck-group arithmetic of bigraded Hodge classes.
//! * [`spaces`]: cohomology of abelian varieties, curves, Kummer K3 and the
//!   named fixtures `J, A, U, W, Sigma, Z`.
//! * [`ledger`]: strata of `|2θ|`, degree-6 stalk ranks of each string, and
//!   the solver for the skyscraper unknowns `r`, `r24`.
//! * [`og6`]: the assembly paths for `H*(M̃)` and their verification report.
//! * [`expr`]: the expression language, its evaluator and renderers.
//! * [`cli`]: the `hodgeledger` command line.

pub mod cli;
pub mod expr;
pub mod hodge;
pub mod ledger;
pub mod og6;
pub mod report;
pub mod spaces;

pub use hodge::{linear_combine, Cell, HodgeClass, HodgeError};
