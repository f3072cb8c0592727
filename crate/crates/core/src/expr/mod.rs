//! The expression language over Hodge classes.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom | call | '(' expr ')'
//! call   := ident '(' args ')'
//! ```
//!
//! `*` is the tensor product. Atoms are `point, L, U, W, J, A, Sigma, Z,
//! kummerK3`. Integer literals, optionally signed, appear only as the first
//! argument of `ab, curve, P, sym, wedge, shift, tate, angle, scale`;
//! `dual, even, odd` take a single expression.

mod describe;
mod eval;
mod lexer;
mod parser;
mod render;

pub use describe::describe;
pub use eval::{evaluate, EvalError, MAX_GRADING, MAX_POWER, MAX_SHIFT};
pub use parser::{parse, AtomName, BinOp, Expr, Func, ParseError, Signature, MAX_DEPTH, MAX_HEIGHT};
pub use render::{render, Format};
