//! Report structures and their text, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;

use octf8::algebra::{check_f4_remark, f4_product, standard_table, MultiplicationTable};
use octf8::cocycle::phi;
use octf8::codes::orbit_decomposition;
use octf8::orders::{gram_certificate, verify_closed, verify_generated, IntegralOrder};
use octf8::verify::SuiteReport;
use octf8::{BasisLabel, Error, Orbit, F4, F8};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_rows<I, R>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 fields")
}

/// Left-aligned columns separated by two spaces, padded by character count.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 < r.len() {
                let pad = widths[c] - cell.chars().count();
                let _ = write!(line, "{cell}{}  ", " ".repeat(pad));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

// ---------------------------------------------------------------------------
// table

#[derive(Serialize)]
struct IndexSign {
    index: u8,
    sign: i8,
}

#[derive(Serialize)]
struct TableJson {
    /// Human label of each field index.
    labels: Vec<String>,
    /// `rows[x][y]` is `e^x e^y = sign e^index`, all indices in field bit order.
    rows: Vec<Vec<IndexSign>>,
}

pub fn table(format: Format) -> Result<String, Error> {
    let t: MultiplicationTable = standard_table()?;
    Ok(match format {
        Format::Json => {
            let labels = F8::all()
                .map(|x| BasisLabel::from_f8(x).to_string())
                .collect();
            let rows = F8::all()
                .map(|x| {
                    F8::all()
                        .map(|y| {
                            let cell = t.get(BasisLabel::from_f8(x), BasisLabel::from_f8(y));
                            IndexSign {
                                index: cell.label.to_f8().bits(),
                                sign: cell.sign.to_i8(),
                            }
                        })
                        .collect()
                })
                .collect();
            json(&TableJson { labels, rows })
        }
        Format::Csv | Format::Text => {
            let mut rows = vec![std::iter::once(String::new())
                .chain(BasisLabel::all().map(|l| l.to_string()))
                .collect::<Vec<_>>()];
            for (r, row) in BasisLabel::all().zip(t.rows()) {
                rows.push(
                    std::iter::once(r.to_string())
                        .chain(row.iter().map(|c| c.to_string()))
                        .collect(),
                );
            }
            if format == Format::Csv {
                csv_rows(rows)
            } else {
                let mut s = aligned(&rows);
                s.push_str("\ne_0 denotes e_7 = e^1\n");
                s
            }
        }
    })
}

// ---------------------------------------------------------------------------
// phi

#[derive(Serialize)]
struct PhiJson {
    /// `phi[x][y]` in field bit order.
    phi: Vec<Vec<u8>>,
}

pub fn phi_matrix(format: Format) -> String {
    let m: Vec<Vec<u8>> = F8::all()
        .map(|x| F8::all().map(|y| u8::from(phi(x, y).is_one())).collect())
        .collect();
    match format {
        Format::Json => json(&PhiJson { phi: m }),
        Format::Csv | Format::Text => {
            let header = std::iter::once("x\\y".to_string())
                .chain((0..8).map(|y: u8| y.to_string()))
                .collect::<Vec<_>>();
            let mut rows = vec![header];
            for (x, r) in m.iter().enumerate() {
                rows.push(
                    std::iter::once(x.to_string())
                        .chain(r.iter().map(|b| b.to_string()))
                        .collect(),
                );
            }
            if format == Format::Csv {
                csv_rows(rows)
            } else {
                aligned(&rows)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// orbits

#[derive(Serialize)]
struct OrbitJson {
    kind: &'static str,
    label: Option<String>,
    size: usize,
    members: Vec<String>,
}

impl OrbitJson {
    fn new(o: &Orbit) -> Self {
        OrbitJson {
            kind: o.kind().as_str(),
            label: o.kind().label(),
            size: o.len(),
            members: o.members().iter().map(|m| m.hex()).collect(),
        }
    }
}

#[derive(Serialize)]
struct NamedOrbit {
    name: String,
    #[serde(flatten)]
    orbit: OrbitJson,
}

#[derive(Serialize)]
struct OrbitsJson {
    orbits: Vec<NamedOrbit>,
}

pub fn orbits(format: Format) -> Result<String, Error> {
    let list: Vec<NamedOrbit> = orbit_decomposition()?
        .iter()
        .map(|o| NamedOrbit {
            name: octf8::orders::conway_smith_name(o),
            orbit: OrbitJson::new(o),
        })
        .collect();
    Ok(match format {
        Format::Json => json(&OrbitsJson { orbits: list }),
        Format::Csv | Format::Text => {
            let header = ["kind", "label", "size", "name", "members"]
                .map(String::from)
                .to_vec();
            let mut rows = vec![header];
            for o in &list {
                rows.push(vec![
                    o.orbit.kind.to_string(),
                    o.orbit.label.clone().unwrap_or_else(|| "-".into()),
                    o.orbit.size.to_string(),
                    o.name.clone(),
                    o.orbit.members.join(" "),
                ]);
            }
            if format == Format::Csv {
                csv_rows(rows)
            } else {
                aligned(&rows)
            }
        }
    })
}

// ---------------------------------------------------------------------------
// order

#[derive(Serialize)]
pub struct OrderJson {
    name: String,
    orbit: OrbitJson,
    code: Vec<String>,
    /// Lattice basis, each vector as 8 fractions in field bit order.
    basis: Vec<Vec<String>>,
    gram: Vec<Vec<i64>>,
    determinant: i64,
    even: bool,
    unit_count: usize,
    closure: &'static str,
    generated_check: &'static str,
}

impl OrderJson {
    pub fn new(order: &IntegralOrder) -> Result<Self, Error> {
        let gram = gram_certificate(order);
        let mut generated = true;
        for &x in order.orbit().members() {
            generated &= verify_generated(order.orbit(), x)?.matches_order;
        }
        Ok(OrderJson {
            name: order.name().to_string(),
            orbit: OrbitJson::new(order.orbit()),
            code: order.code().hex_words(),
            basis: order
                .basis()
                .iter()
                .map(|b| b.coeffs().iter().map(|c| c.fraction_string()).collect())
                .collect(),
            gram: gram.gram.iter().map(|r| r.to_vec()).collect(),
            determinant: i64::try_from(gram.determinant).expect("small determinant"),
            even: gram.even,
            unit_count: gram.unit_count,
            closure: verdict(verify_closed(order).passed()),
            generated_check: verdict(generated),
        })
    }

    pub fn passed(&self) -> bool {
        self.closure == "pass" && self.generated_check == "pass"
    }

    fn summary_header() -> Vec<String> {
        [
            "name",
            "kind",
            "label",
            "code_size",
            "determinant",
            "even",
            "unit_count",
            "closure",
            "generated_check",
        ]
        .map(String::from)
        .to_vec()
    }

    fn summary_row(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            self.orbit.kind.to_string(),
            self.orbit.label.clone().unwrap_or_else(|| "-".into()),
            self.code.len().to_string(),
            self.determinant.to_string(),
            self.even.to_string(),
            self.unit_count.to_string(),
            self.closure.to_string(),
            self.generated_check.to_string(),
        ]
    }

    fn detail_text(&self) -> String {
        let mut s = aligned(&[
            vec!["name".into(), self.name.clone()],
            vec![
                "orbit".into(),
                format!(
                    "{} {} ({} members: {})",
                    self.orbit.kind,
                    self.orbit.label.as_deref().unwrap_or("-"),
                    self.orbit.size,
                    self.orbit.members.join(" ")
                ),
            ],
            vec![
                "code".into(),
                format!("{} words: {}", self.code.len(), self.code.join(" ")),
            ],
            vec!["determinant".into(), self.determinant.to_string()],
            vec!["even".into(), self.even.to_string()],
            vec!["unit_count".into(), self.unit_count.to_string()],
            vec!["closure".into(), self.closure.into()],
            vec!["generated_check".into(), self.generated_check.into()],
        ]);
        s.push_str("\nbasis (coefficients of e^0 .. e^7 in field bit order)\n");
        s.push_str(&aligned(&self.basis));
        s.push_str("\ngram\n");
        let gram: Vec<Vec<String>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|g| g.to_string()).collect())
            .collect();
        s.push_str(&aligned(&gram));
        s
    }
}

#[derive(Serialize)]
struct OrdersJson<'a> {
    orders: &'a [OrderJson],
}

pub fn orders(reports: &[OrderJson], single: bool, format: Format) -> String {
    match (format, single) {
        (Format::Json, true) => json(&reports[0]),
        (Format::Json, false) => json(&OrdersJson { orders: reports }),
        (Format::Text, true) => reports[0].detail_text(),
        (Format::Csv | Format::Text, _) => {
            let rows: Vec<Vec<String>> = std::iter::once(OrderJson::summary_header())
                .chain(reports.iter().map(OrderJson::summary_row))
                .collect();
            if format == Format::Csv {
                csv_rows(rows)
            } else {
                aligned(&rows)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// verify

#[derive(Serialize)]
struct VerifyJson<'a> {
    seed: u64,
    passed: bool,
    checks: &'a [octf8::verify::Check],
}

pub fn verify(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => json(&VerifyJson {
            seed: report.seed,
            passed: report.all_passed(),
            checks: &report.checks,
        }),
        Format::Csv => csv_rows(
            std::iter::once(
                ["name", "result", "detail", "claim"]
                    .map(String::from)
                    .to_vec(),
            )
            .chain(report.checks.iter().map(|c| {
                vec![
                    c.name.clone(),
                    verdict(c.passed).into(),
                    c.detail.clone(),
                    c.claim.clone(),
                ]
            })),
        ),
        Format::Text => {
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    let mut r = vec![
                        verdict(c.passed).to_uppercase(),
                        c.name.clone(),
                        c.detail.clone(),
                    ];
                    if !c.passed {
                        r.push(format!("[{}]", c.claim));
                    }
                    r
                })
                .collect();
            let mut s = aligned(&rows);
            let ok = report.checks.iter().filter(|c| c.passed).count();
            let _ = writeln!(
                s,
                "\n{ok}/{} checks passed (seed {})",
                report.checks.len(),
                report.seed
            );
            s
        }
    }
}

// ---------------------------------------------------------------------------
// f4

#[derive(Serialize)]
struct Laws {
    commutative: bool,
    associative: bool,
    identity: bool,
    squares_are_identity: bool,
    presentation: bool,
}

#[derive(Serialize)]
struct F4Json {
    /// `rows[x][y]` is `e^x e^y = sign e^index`, indices in F4 bit order.
    rows: Vec<Vec<IndexSign>>,
    laws: Laws,
    passed: bool,
}

fn f4_label(x: F4) -> &'static str {
    match x.bits() {
        0 => "e^0",
        1 => "e^1",
        2 => "e^w",
        _ => "e^w2",
    }
}

pub fn f4(format: Format) -> (String, bool) {
    let r = check_f4_remark();
    let passed = r.all_pass();
    let laws = [
        ("commutative", r.commutative),
        ("associative", r.associative),
        ("identity", r.identity),
        ("squares_are_identity", r.squares_are_identity),
        ("presentation", r.presentation),
    ];
    let out = match format {
        Format::Json => json(&F4Json {
            rows: F4::all()
                .map(|x| {
                    F4::all()
                        .map(|y| {
                            let (s, z) = f4_product(x, y);
                            IndexSign {
                                index: z.bits(),
                                sign: s.to_i8(),
                            }
                        })
                        .collect()
                })
                .collect(),
            laws: Laws {
                commutative: r.commutative,
                associative: r.associative,
                identity: r.identity,
                squares_are_identity: r.squares_are_identity,
                presentation: r.presentation,
            },
            passed,
        }),
        Format::Csv => csv_rows(
            std::iter::once(["law", "result"].map(String::from).to_vec()).chain(
                laws.iter()
                    .map(|(n, b)| vec![n.to_string(), verdict(*b).into()]),
            ),
        ),
        Format::Text => {
            let mut rows = vec![std::iter::once(String::new())
                .chain(F4::all().map(|y| f4_label(y).to_string()))
                .collect::<Vec<_>>()];
            for x in F4::all() {
                rows.push(
                    std::iter::once(f4_label(x).to_string())
                        .chain(F4::all().map(|y| {
                            let (s, z) = f4_product(x, y);
                            let sign = if s.is_minus() { "-" } else { "" };
                            format!("{sign}{}", f4_label(z))
                        }))
                        .collect(),
                );
            }
            let mut s = aligned(&rows);
            s.push('\n');
            let verdicts: Vec<Vec<String>> = laws
                .iter()
                .map(|(n, b)| vec![verdict(*b).to_uppercase(), n.to_string()])
                .collect();
            s.push_str(&aligned(&verdicts));
            s
        }
    };
    (out, passed)
}
