use thiserror::Error;

use super::parser::{AtomName, BinOp, Expr, Func};
use crate::hodge::{HodgeClass, HodgeError};
use crate::spaces::{self, curve, fixture, parity_part, projective, FixtureName, Parity, SpaceError};

/// Largest `k` accepted by `sym`, `wedge`.
pub const MAX_POWER: i64 = 64;
/// Largest `|k|` accepted by `shift`, `tate`, `angle` and `P`.
pub const MAX_SHIFT: i64 = 1 << 16;
/// Bound on `|n|`, `|p|`, `|q|` of every intermediate result.
pub const MAX_GRADING: i32 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("{func} expects a nonnegative integer, got {value}")]
    NegativeArgument { func: &'static str, value: i64 },
    #[error("{func}({value}, ..) exceeds the limit {limit}")]
    ArgumentTooLarge { func: &'static str, value: i64, limit: i64 },
    #[error("result leaves the supported grading range |n|, |p|, |q| <= {MAX_GRADING}")]
    GradingOverflow,
    #[error("malformed expression: {0}")]
    Malformed(String),
}

fn atom(a: AtomName) -> HodgeClass {
    match a {
        AtomName::Point => HodgeClass::point(),
        AtomName::L => HodgeClass::lefschetz(),
        AtomName::U => fixture(FixtureName::U),
        AtomName::W => fixture(FixtureName::W),
        AtomName::J => fixture(FixtureName::J),
        AtomName::A => fixture(FixtureName::A),
        AtomName::Sigma => fixture(FixtureName::Sigma),
        AtomName::Z => fixture(FixtureName::Z),
        AtomName::KummerK3 => fixture(FixtureName::KummerK3),
    }
}

fn bounded(c: HodgeClass) -> Result<HodgeClass, EvalError> {
    let ok = c
        .iter()
        .all(|(cell, _)| [cell.degree, cell.p, cell.q].iter().all(|x| x.abs() <= MAX_GRADING));
    if ok {
        Ok(c)
    } else {
        Err(EvalError::GradingOverflow)
    }
}

fn nonneg(func: Func, k: i64, limit: Option<i64>) -> Result<u32, EvalError> {
    if k < 0 {
        return Err(EvalError::NegativeArgument {
            func: func.as_str(),
            value: k,
        });
    }
    if let Some(limit) = limit {
        if k > limit {
            return Err(EvalError::ArgumentTooLarge {
                func: func.as_str(),
                value: k,
                limit,
            });
        }
    }
    u32::try_from(k).map_err(|_| EvalError::ArgumentTooLarge {
        func: func.as_str(),
        value: k,
        limit: i64::from(u32::MAX),
    })
}

fn int_arg(func: Func, e: &Expr) -> Result<i64, EvalError> {
    match e {
        Expr::IntLit(k) => Ok(*k),
        other => Err(EvalError::Malformed(format!(
            "{} expects an integer, got {other}",
            func.as_str()
        ))),
    }
}

/// Evaluates a parsed expression.
pub fn evaluate(e: &Expr) -> Result<HodgeClass, EvalError> {
    match e {
        Expr::Atom(a) => Ok(atom(*a)),
        Expr::IntLit(k) => Err(EvalError::Malformed(format!("bare integer {k}"))),
        Expr::BinOp(op, l, r) => {
            let (l, r) = (evaluate(l)?, evaluate(r)?);
            bounded(match op {
                BinOp::Add => l + r,
                BinOp::Sub => l - r,
                BinOp::Mul => l.tensor(&r),
            })
        }
        Expr::Call(func, args) => {
            let func = *func;
            if args.len() != func.signature().arity() {
                return Err(EvalError::Malformed(format!(
                    "{} with {} arguments",
                    func.as_str(),
                    args.len()
                )));
            }
            let k = || int_arg(func, &args[0]);
            let inner = || evaluate(args.last().expect("arity checked"));
            let out = match func {
                Func::Ab => spaces::abelian(nonneg(func, k()?, None)?)?,
                Func::Curve => curve(nonneg(func, k()?, None)?),
                Func::P => projective(nonneg(func, k()?, Some(MAX_SHIFT))?),
                Func::Sym => inner()?.super_sym(nonneg(func, k()?, Some(MAX_POWER))?)?,
                Func::Wedge => inner()?.super_wedge(nonneg(func, k()?, Some(MAX_POWER))?)?,
                Func::Shift => inner()?.shift_up(nonneg(func, k()?, Some(MAX_SHIFT))?),
                Func::Angle => inner()?.angle(nonneg(func, k()?, Some(MAX_SHIFT))?),
                Func::Tate => {
                    let k = k()?;
                    if k.abs() > MAX_SHIFT {
                        return Err(EvalError::ArgumentTooLarge {
                            func: func.as_str(),
                            value: k,
                            limit: MAX_SHIFT,
                        });
                    }
                    inner()?.tate(k as i32)
                }
                Func::Scale => inner()?.scale(k()?),
                Func::Dual => inner()?.dual(),
                Func::Even => parity_part(&inner()?, Parity::Even),
                Func::Odd => parity_part(&inner()?, Parity::Odd),
            };
            bounded(out)
        }
    }
}
