//! Machine-readable tables of `M(n)` against the total component count.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::count::{self, BigCount, CountError};

/// One table row: the molecule count, the total period-n component count,
/// and their exact ratio.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: u64,
    pub m_n: BigCount,
    pub nu_n: BigCount,
    pub ratio: BigRational,
}

impl TableRow {
    /// Ratio rendered as `num/den`, denominator kept even when it is 1.
    pub fn ratio_string(&self) -> String {
        format!("{}/{}", self.ratio.numer(), self.ratio.denom())
    }
}

/// Rows for `n = 1..=max_n`. `M(n)` uses the direct ordered-factorization
/// sum while it fits the budget and falls back to the divisor recursion
/// beyond it; the list of n that fell back is returned alongside.
pub fn build_table(max_n: u64, budget: u64) -> Result<(Vec<TableRow>, Vec<u64>), CountError> {
    if max_n == 0 {
        return Err(CountError::ZeroInput);
    }
    let mut rows = Vec::with_capacity(max_n as usize);
    let mut fallbacks = Vec::new();
    for n in 1..=max_n {
        let m_n = match count::molecule_count_direct_with_budget(n, budget) {
            Ok(m) => m,
            Err(CountError::BudgetExceeded { .. }) => {
                fallbacks.push(n);
                count::molecule_count_recursive(n)?
            }
            Err(e) => return Err(e),
        };
        let nu_n = count::total_component_count(n)?;
        debug_assert!(m_n <= nu_n);
        let ratio = BigRational::new(BigInt::from(m_n.clone()), BigInt::from(nu_n.clone()));
        rows.push(TableRow { n, m_n, nu_n, ratio });
    }
    Ok((rows, fallbacks))
}

/// CSV with header `n,M,nu,ratio` and a trailing newline.
pub fn to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,M,nu,ratio\n");
    for row in rows {
        out.push_str(&format!("{},{},{},{}\n", row.n, row.m_n, row.nu_n, row.ratio_string()));
    }
    out
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    m_n: String,
    nu_n: String,
    ratio: String,
}

/// JSON array of row objects; counts as decimal strings so they survive any
/// word size.
pub fn to_json(rows: &[TableRow]) -> String {
    let out: Vec<JsonRow> = rows
        .iter()
        .map(|row| JsonRow {
            n: row.n,
            m_n: row.m_n.to_string(),
            nu_n: row.nu_n.to_string(),
            ratio: row.ratio_string(),
        })
        .collect();
    serde_json::to_string(&out).expect("rows are plain data")
}
