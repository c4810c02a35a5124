use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::Elem;

/// Expression tree of a free-group word; variables are indices into the
/// word's name list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Pow(Box<Term>, i64),
    /// Left-normed commutator `[t_1, ..., t_k]`; a single entry is itself.
    Comm(Vec<Term>),
    Prod(Vec<Term>),
}

/// The two parametrised families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x^(p^i) [y_1, ..., y_k]`.
    Short { p: u32, i: u32, k: u32 },
    /// `x^(p^i) [y_1, ..., y_(p-1)]^(p^(i-1)) [z_1, ..., z_p]`.
    Long { p: u32, i: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    names: Vec<String>,
    term: Term,
    family: Option<Family>,
}

fn prime_pow(p: u32, e: u32) -> Result<i64> {
    (p as i64)
        .checked_pow(e)
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{e} overflows")))
}

fn check_prime(p: u32) -> Result<()> {
    if !crate::arith::is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    Ok(())
}

impl Word {
    /// Builds a word from names and a term; every variable index must name
    /// an entry of `names`, every name must occur, and no exponent is zero.
    pub fn new(names: Vec<String>, term: Term) -> Result<Word> {
        let mut used = vec![false; names.len()];
        fn walk(t: &Term, used: &mut [bool]) -> Result<()> {
            match t {
                Term::Var(v) => match used.get_mut(*v) {
                    Some(u) => {
                        *u = true;
                        Ok(())
                    }
                    None => Err(Error::InvalidParameter(format!("variable index {v} has no name"))),
                },
                Term::Pow(b, e) => {
                    if *e == 0 {
                        return Err(Error::InvalidParameter("zero exponent".into()));
                    }
                    walk(b, used)
                }
                Term::Comm(ts) | Term::Prod(ts) => {
                    if ts.is_empty() {
                        return Err(Error::InvalidParameter("empty product or commutator".into()));
                    }
                    ts.iter().try_for_each(|t| walk(t, used))
                }
            }
        }
        walk(&term, &mut used)?;
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::InvalidParameter(format!("variable {} does not occur", names[v])));
        }
        Ok(Word {
            names,
            term,
            family: None,
        })
    }

    /// `x^(p^i) [y_1, ..., y_k]`, arity `k + 1`.
    pub fn short(p: u32, i: u32, k: u32) -> Result<Word> {
        check_prime(p)?;
        if k == 0 {
            return Err(Error::InvalidParameter("short words need k >= 1".into()));
        }
        let mut names = vec!["x".to_string()];
        names.extend((1..=k).map(|j| format!("y{j}")));
        let comm = Term::Comm((1..=k as usize).map(Term::Var).collect());
        let term = Term::Prod(vec![Term::Pow(Box::new(Term::Var(0)), prime_pow(p, i)?), comm]);
        Ok(Word {
            names,
            term,
            family: Some(Family::Short { p, i, k }),
        })
    }

    /// `x^(p^i) [y_1, ..., y_(p-1)]^(p^(i-1)) [z_1, ..., z_p]`, arity `2p`.
    pub fn long(p: u32, i: u32) -> Result<Word> {
        check_prime(p)?;
        if p == 2 {
            return Err(Error::InvalidParameter("long words need an odd prime".into()));
        }
        if i == 0 {
            return Err(Error::InvalidParameter("long words need i >= 1".into()));
        }
        let m = p as usize;
        let mut names = vec!["x".to_string()];
        names.extend((1..m).map(|j| format!("y{j}")));
        names.extend((1..=m).map(|j| format!("z{j}")));
        let ys = Term::Comm((1..m).map(Term::Var).collect());
        let zs = Term::Comm((m..2 * m).map(Term::Var).collect());
        let ys = match prime_pow(p, i - 1)? {
            1 => ys,
            e => Term::Pow(Box::new(ys), e),
        };
        let term = Term::Prod(vec![Term::Pow(Box::new(Term::Var(0)), prime_pow(p, i)?), ys, zs]);
        Ok(Word {
            names,
            term,
            family: Some(Family::Long { p, i }),
        })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    /// The word spelled out as `(variable, exponent)` letters with
    /// commutators expanded and adjacent letters merged.
    pub fn letters(&self) -> Vec<(usize, i64)> {
        fn push(out: &mut Vec<(usize, i64)>, v: usize, e: i64) {
            if let Some(last) = out.last_mut() {
                if last.0 == v {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                    return;
                }
            }
            out.push((v, e));
        }
        fn invert(ls: &[(usize, i64)]) -> Vec<(usize, i64)> {
            ls.iter().rev().map(|&(v, e)| (v, -e)).collect()
        }
        fn append(out: &mut Vec<(usize, i64)>, ls: &[(usize, i64)]) {
            for &(v, e) in ls {
                push(out, v, e);
            }
        }
        fn expand(t: &Term) -> Vec<(usize, i64)> {
            match t {
                Term::Var(v) => vec![(*v, 1)],
                Term::Pow(b, e) => {
                    let base = expand(b);
                    let unit = if *e < 0 { invert(&base) } else { base };
                    let mut out = Vec::new();
                    for _ in 0..e.unsigned_abs() {
                        append(&mut out, &unit);
                    }
                    out
                }
                Term::Prod(ts) => {
                    let mut out = Vec::new();
                    for t in ts {
                        append(&mut out, &expand(t));
                    }
                    out
                }
                Term::Comm(ts) => {
                    let mut acc = expand(&ts[0]);
                    for t in &ts[1..] {
                        let b = expand(t);
                        let mut out = Vec::new();
                        append(&mut out, &invert(&acc));
                        append(&mut out, &invert(&b));
                        append(&mut out, &acc);
                        append(&mut out, &b);
                        acc = out;
                    }
                    acc
                }
            }
        }
        expand(&self.term)
    }

    /// Value at `args`, checking arity and ids.
    pub fn eval(&self, g: &FiniteGroup, args: &[Elem]) -> Result<Elem> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: args.len(),
            });
        }
        for &a in args {
            g.check(a)?;
        }
        Ok(self.eval_unchecked(g, args))
    }

    pub(crate) fn eval_unchecked(&self, g: &FiniteGroup, args: &[Elem]) -> Elem {
        fn go(t: &Term, g: &FiniteGroup, args: &[Elem]) -> Elem {
            match t {
                Term::Var(v) => args[*v],
                Term::Pow(b, e) => g.pow(go(b, g, args), *e),
                Term::Prod(ts) => ts.iter().fold(0, |acc, t| g.mul(acc, go(t, g, args))),
                Term::Comm(ts) => {
                    let first = go(&ts[0], g, args);
                    ts[1..]
                        .iter()
                        .fold(first, |acc, t| g.commutator(acc, go(t, g, args)))
                }
            }
        }
        go(&self.term, g, args)
    }
}

/// `eval_word(w, G, args)`.
pub fn eval_word(w: &Word, g: &FiniteGroup, args: &[Elem]) -> Result<Elem> {
    w.eval(g, args)
}

fn fmt_term(t: &Term, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Var(v) => write!(f, "{}", names[*v]),
        Term::Pow(b, e) => {
            match **b {
                Term::Var(_) | Term::Comm(_) => fmt_term(b, names, f)?,
                _ => {
                    write!(f, "(")?;
                    fmt_term(b, names, f)?;
                    write!(f, ")")?;
                }
            }
            write!(f, "^{e}")
        }
        Term::Comm(ts) => {
            write!(f, "[")?;
            for (n, t) in ts.iter().enumerate() {
                if n > 0 {
                    write!(f, ",")?;
                }
                fmt_term(t, names, f)?;
            }
            write!(f, "]")
        }
        Term::Prod(ts) => {
            for (n, t) in ts.iter().enumerate() {
                if n > 0 {
                    write!(f, " ")?;
                }
                match t {
                    Term::Prod(_) => {
                        write!(f, "(")?;
                        fmt_term(t, names, f)?;
                        write!(f, ")")?;
                    }
                    _ => fmt_term(t, names, f)?,
                }
            }
            Ok(())
        }
    }
}

/// Free-form text accepted by [`Word::parse`].
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_term(&self.term, &self.names, f)
    }
}
