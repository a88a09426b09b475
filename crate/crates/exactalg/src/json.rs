//! JSON serialization of polynomials and rational functions.
//!
//! Format contract (used by all downstream matrix export):
//! `SparsePoly`: `{"vars": ["t1", ...], "terms": [{"e": [ints], "c": "num/den"}, ...]}`
//! with terms in canonical (descending graded-lex) order;
//! `RationalFunction`: `{"num": <poly>, "den": <poly>}`.

use crate::poly::SparsePoly;
use crate::ratfunc::RationalFunction;
use crate::var::{self, Var};
use crate::{BigInt, BigRat};
use serde_json::{json, Value};
use smallvec::SmallVec;
use std::str::FromStr;

pub fn poly_to_json(p: &SparsePoly) -> Value {
    let vars: Vec<String> = p.vars().iter().map(|v| v.to_string()).collect();
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(e, c)| {
            json!({
                "e": e.iter().copied().collect::<Vec<i32>>(),
                "c": format!("{}/{}", c.numer(), c.denom()),
            })
        })
        .collect();
    json!({ "vars": vars, "terms": terms })
}

pub fn ratfunc_to_json(f: &RationalFunction) -> Value {
    json!({ "num": poly_to_json(f.numer()), "den": poly_to_json(&f.denom()) })
}

fn parse_rat(s: &str) -> Option<BigRat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    Some(BigRat::new(BigInt::from_str(n).ok()?, BigInt::from_str(d).ok()?))
}

pub fn poly_from_json(v: &Value) -> Option<SparsePoly> {
    let vars: Vec<Var> = v
        .get("vars")?
        .as_array()?
        .iter()
        .map(|x| x.as_str().and_then(Var::parse))
        .collect::<Option<_>>()?;
    let vars = var::intern(vars);
    let terms = v
        .get("terms")?
        .as_array()?
        .iter()
        .map(|t| {
            let e: SmallVec<[i32; 6]> = t
                .get("e")?
                .as_array()?
                .iter()
                .map(|x| x.as_i64().map(|y| y as i32))
                .collect::<Option<_>>()?;
            let c = parse_rat(t.get("c")?.as_str()?)?;
            Some((e, c))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(SparsePoly::from_terms(vars, terms))
}

pub fn ratfunc_from_json(v: &Value) -> Option<RationalFunction> {
    let num = poly_from_json(v.get("num")?)?;
    let den = poly_from_json(v.get("den")?)?;
    Some(RationalFunction::new(num, den))
}
