//! Numeric CLI parameters that accept both decimals and exact fractions
//! (`5/2`). The exact form is carried alongside the float so that routines
//! with an exact-rational path can use it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::str::FromStr;

#[derive(Debug, Clone)]
pub struct Param {
    pub value: f64,
    pub exact: Option<BigRational>,
}

impl FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator: {e}"))?;
            let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator: {e}"))?;
            if d == BigInt::from(0) {
                return Err("zero denominator".into());
            }
            let r = BigRational::new(n, d);
            let value = r
                .to_f64()
                .ok_or_else(|| "fraction out of f64 range".to_string())?;
            return Ok(Param {
                value,
                exact: Some(r),
            });
        }
        let value: f64 = s.parse().map_err(|e| format!("bad number '{s}': {e}"))?;
        Ok(Param { value, exact: None })
    }
}
