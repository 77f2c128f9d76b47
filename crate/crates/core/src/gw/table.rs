//! Per-degree invariant tables, multiple-cover inversions and their JSON/CSV forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gw::quintic::quintic;
use crate::gw::{genus0_quintic, quintic_genus1, reduced_genus1};
use crate::hypergeometric::{HyperSpec, Hypergeometric};
use crate::rational::{approx, divisors, frac, int, sigma, Rational};

mod as_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{parse, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| serde::de::Error::custom(format!("not a rational: {s:?}")))
    }

    pub mod optional {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_str(&r.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let s: Option<String> = Option::deserialize(d)?;
            match s.as_deref().map(str::trim) {
                None | Some("") => Ok(None),
                Some(t) => parse(t)
                    .map(Some)
                    .ok_or_else(|| serde::de::Error::custom(format!("not a rational: {t:?}"))),
            }
        }
    }
}

/// One degree of a table. Columns other than the reduced genus-1 invariant are optional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GWRow {
    pub d: usize,
    #[serde(
        rename = "N0",
        with = "as_text::optional",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub genus0: Option<Rational>,
    #[serde(rename = "GW1_reduced", with = "as_text")]
    pub reduced_genus1: Rational,
    #[serde(
        rename = "N1",
        with = "as_text::optional",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub genus1: Option<Rational>,
    #[serde(
        rename = "n0",
        with = "as_text::optional",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub instanton0: Option<Rational>,
    #[serde(
        rename = "n1",
        with = "as_text::optional",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub instanton1: Option<Rational>,
}

impl GWRow {
    pub fn new(d: usize, reduced_genus1: Rational) -> Self {
        GWRow {
            d,
            genus0: None,
            reduced_genus1,
            genus1: None,
            instanton0: None,
            instanton1: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GWTable {
    pub n: u32,
    pub truncation: usize,
    pub rows: Vec<GWRow>,
}

const CSV_HEADER: [&str; 6] = ["d", "N0", "GW1_reduced", "N1", "n0", "n1"];

impl GWTable {
    /// Rows `d = 1..=D` with only the reduced genus-1 column.
    pub fn from_reduced(n: u32, reduced: &[Rational]) -> Self {
        let rows = reduced
            .iter()
            .enumerate()
            .map(|(i, r)| GWRow::new(i + 1, r.clone()))
            .collect();
        GWTable {
            n,
            truncation: reduced.len(),
            rows,
        }
    }

    fn column(
        &self,
        name: &'static str,
        get: impl Fn(&GWRow) -> &Option<Rational>,
    ) -> Result<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| get(r).clone().ok_or(Error::MissingColumn(name)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        let cell = |r: &Option<Rational>| r.as_ref().map(Rational::to_string).unwrap_or_default();
        for row in &self.rows {
            w.write_record([
                row.d.to_string(),
                cell(&row.genus0),
                row.reduced_genus1.to_string(),
                cell(&row.genus1),
                cell(&row.instanton0),
                cell(&row.instanton1),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    /// Parse the CSV form; `n` is not part of it and must be supplied.
    pub fn from_csv(n: u32, s: &str) -> std::result::Result<Self, csv::Error> {
        let mut r = csv::Reader::from_reader(s.as_bytes());
        let rows: Vec<GWRow> = r.deserialize().collect::<std::result::Result<_, _>>()?;
        Ok(GWTable {
            n,
            truncation: rows.len(),
            rows,
        })
    }

    /// Aligned columns; decimals in brackets are approximations.
    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}, degrees 1..={}\n", self.n, self.truncation);
        for row in &self.rows {
            let mut parts = vec![format!("d = {}", row.d)];
            let mut push = |name: &str, v: Option<&Rational>| {
                if let Some(v) = v {
                    if v.is_integer() {
                        parts.push(format!("{name} = {v}"));
                    } else {
                        parts.push(format!("{name} = {v} [~{}]", approx(v, 6)));
                    }
                }
            };
            push("N0", row.genus0.as_ref());
            push("GW1_reduced", Some(&row.reduced_genus1));
            push("N1", row.genus1.as_ref());
            push("n0", row.instanton0.as_ref());
            push("n1", row.instanton1.as_ref());
            out.push_str(&parts.join("  "));
            out.push('\n');
        }
        out
    }
}

/// Fill `N1 = GW1_reduced + N0/12`.
pub fn reduced_to_standard(table: &GWTable) -> Result<GWTable> {
    let n0 = table.column("N0", |r| &r.genus0)?;
    let mut out = table.clone();
    for (row, g) in out.rows.iter_mut().zip(&n0) {
        row.genus1 = Some(&row.reduced_genus1 + g * frac(1, 12));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    Zero,
    One,
}

/// `N_{0,d} = sum_{k | d} n_{0,d/k} / k³`.
pub fn genus0_multiple_covers(n0: &[Rational]) -> Vec<Rational> {
    (1..=n0.len() as u64)
        .map(|d| {
            divisors(d)
                .map(|k| &n0[(d / k - 1) as usize] / int((k * k * k) as i64))
                .sum()
        })
        .collect()
}

/// `N_{1,d} = sum_{k | d} n_{1,d/k} σ_k / k + (1/12) sum_{k | d} n_{0,d/k} / k`.
pub fn genus1_multiple_covers(n1: &[Rational], n0: &[Rational]) -> Vec<Rational> {
    (1..=n1.len() as u64)
        .map(|d| {
            divisors(d)
                .map(|k| {
                    let j = (d / k - 1) as usize;
                    &n1[j] * frac(sigma(k) as i64, k as i64) + &n0[j] * frac(1, 12 * k as i64)
                })
                .sum()
        })
        .collect()
}

/// Solve the multiple-cover formulas for instanton numbers, degree by degree.
pub fn instanton_inversion(table: &GWTable, genus: Genus) -> Result<GWTable> {
    let mut out = table.clone();
    match genus {
        Genus::Zero => {
            let big = table.column("N0", |r| &r.genus0)?;
            let mut n0: Vec<Rational> = Vec::with_capacity(big.len());
            for d in 1..=big.len() as u64 {
                let covers: Rational = divisors(d)
                    .filter(|&k| k > 1)
                    .map(|k| &n0[(d / k - 1) as usize] / int((k * k * k) as i64))
                    .sum();
                n0.push(&big[d as usize - 1] - covers);
            }
            for (row, v) in out.rows.iter_mut().zip(n0) {
                row.instanton0 = Some(v);
            }
        }
        Genus::One => {
            let big = table.column("N1", |r| &r.genus1)?;
            let n0 = table.column("n0", |r| &r.instanton0)?;
            let mut n1: Vec<Rational> = Vec::with_capacity(big.len());
            for d in 1..=big.len() as u64 {
                let mut rest: Rational = divisors(d)
                    .map(|k| &n0[(d / k - 1) as usize] * frac(1, 12 * k as i64))
                    .sum();
                for k in divisors(d).filter(|&k| k > 1) {
                    rest += &n1[(d / k - 1) as usize] * frac(sigma(k) as i64, k as i64);
                }
                n1.push(&big[d as usize - 1] - rest);
            }
            for (row, v) in out.rows.iter_mut().zip(n1) {
                row.instanton1 = Some(v);
            }
        }
    }
    Ok(out)
}

/// Invariant table through degree `D`. For the quintic every column is filled and the
/// standard genus-1 column is cross-checked against its own closed formula.
pub fn invariants_table(n: u32, d: usize) -> Result<GWTable> {
    if n != 5 {
        let h = Hypergeometric::new(HyperSpec::new(n, d)?)?;
        return Ok(GWTable::from_reduced(n, &reduced_genus1(&h)?));
    }
    let h = quintic(d)?;
    let mut table = GWTable::from_reduced(n, &reduced_genus1(&h)?);
    let (n0, report) = genus0_quintic(d)?;
    if !report.pass {
        return Err(Error::IdentityFailed(report.to_string()));
    }
    for (row, g) in table.rows.iter_mut().zip(n0) {
        row.genus0 = Some(g);
    }
    table = reduced_to_standard(&table)?;
    let direct = quintic_genus1(d)?;
    if let Some((i, row)) = table
        .rows
        .iter()
        .enumerate()
        .find(|(i, r)| r.genus1.as_ref() != Some(&direct[*i]))
    {
        return Err(Error::IdentityFailed(format!(
            "degree {}: standard genus-1 invariant {} from the reduced series, {} directly",
            i + 1,
            row.genus1.as_ref().expect("filled above"),
            direct[i]
        )));
    }
    table = instanton_inversion(&table, Genus::Zero)?;
    instanton_inversion(&table, Genus::One)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_sums() {
        assert_eq!((sigma(1), sigma(2), sigma(4)), (1, 3, 7));
    }

    #[test]
    fn standard_from_reduced() {
        let mut t = GWTable::from_reduced(5, &[int(0)]);
        t.rows[0].genus0 = Some(int(2875));
        let s = reduced_to_standard(&t).unwrap();
        assert_eq!(s.rows[0].genus1, Some(frac(2875, 12)));
        let back = s.rows[0].genus1.clone().unwrap() - int(2875) * frac(1, 12);
        assert_eq!(back, t.rows[0].reduced_genus1);

        let mut z = GWTable::from_reduced(5, &[int(0), int(0)]);
        for r in &mut z.rows {
            r.genus0 = Some(int(0));
        }
        assert!(reduced_to_standard(&z)
            .unwrap()
            .rows
            .iter()
            .all(|r| r.genus1 == Some(int(0))));
        assert_eq!(
            reduced_to_standard(&GWTable::from_reduced(5, &[int(1)])).unwrap_err(),
            Error::MissingColumn("N0")
        );
    }

    #[test]
    fn inversion_small_degrees() {
        let mut t = GWTable::from_reduced(5, &[int(0), int(0)]);
        t.rows[0].genus0 = Some(int(2875));
        t.rows[1].genus0 = Some(frac(4876875, 8));
        let t = instanton_inversion(&t, Genus::Zero).unwrap();
        assert_eq!(t.rows[0].instanton0, Some(int(2875)));
        assert_eq!(t.rows[1].instanton0, Some(int(609250)));
        assert_eq!(
            instanton_inversion(&t, Genus::One).unwrap_err(),
            Error::MissingColumn("N1")
        );
    }

    #[test]
    fn json_and_csv_round_trip() {
        let mut t = GWTable::from_reduced(5, &[int(0), frac(-7, 3)]);
        t.rows[0].genus0 = Some(int(2875));
        let json = t.to_json();
        let back = GWTable::from_json(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json(), json);
        assert!(json.contains("\"GW1_reduced\": \"-7/3\""));
        let csv = t.to_csv();
        assert!(csv.starts_with("d,N0,GW1_reduced,N1,n0,n1\n1,2875,0,,,\n"));
        assert_eq!(GWTable::from_csv(5, &csv).unwrap(), t);
    }
}
