use serde::Serialize;

use bernstir::arith::{self, format_rational, Rational};
use bernstir::bernoulli::{self, oracle_eval, BernoulliFamily, EvalSpec};
use bernstir::identities::{self, Grid, IdentityReport};
use bernstir::output::{rational, to_csv, Document};
use bernstir::rstirling::StirlingCache;
use bernstir::Error;

use super::{BernoulliArgs, Failure, Format, Route, StirlingArgs, TableArgs, TableKind, VerifyArgs};

const MAX_ORDER_VAR: &str = "BERNSTIR_MAX_ORDER";
const DEFAULT_MAX_ORDER: usize = 256;

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn lib_failure(e: Error) -> Failure {
    match e {
        Error::PoleAtSampledPoint { .. } => Failure::Pole(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

/// Largest series truncation order this process may build.
fn max_order() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_VAR) {
        Err(_) => Ok(DEFAULT_MAX_ORDER),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{MAX_ORDER_VAR}={v:?} is not a natural number"))),
    }
}

fn check_order(order: usize) -> Outcome {
    let cap = max_order()?;
    if order > cap {
        return Err(usage(format!(
            "series truncation order {order} exceeds {MAX_ORDER_VAR}={cap}"
        )));
    }
    Ok(())
}

fn emit(text: String) {
    print!("{text}");
}

fn emit_doc<P: Serialize, R: Serialize>(command: &'static str, params: P, result: R) {
    emit(Document { command, params, result }.to_json());
}

#[derive(Serialize)]
struct Value(#[serde(with = "rational")] Rational);

// ---------------------------------------------------------------- stirling

#[derive(Serialize)]
struct StirlingParams {
    kind: String,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    big_n: Option<usize>,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    big_k: Option<usize>,
    r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<usize>,
}

#[derive(Serialize)]
struct StirlingEntry {
    #[serde(rename = "N")]
    big_n: usize,
    #[serde(rename = "K")]
    big_k: usize,
    value: String,
}

pub fn stirling(args: &StirlingArgs) -> Outcome {
    let params = StirlingParams {
        kind: args.kind.to_string(),
        big_n: args.big_n,
        big_k: args.big_k,
        r: args.r,
        table: args.table,
    };
    let cache = StirlingCache::global();
    if let Some(max_n) = args.table {
        let table = cache.table(args.kind, args.r, max_n);
        let entries: Vec<StirlingEntry> = (args.r..=max_n)
            .flat_map(|n| {
                table.row(n).into_iter().flatten().map(move |(k, v)| StirlingEntry {
                    big_n: n,
                    big_k: k,
                    value: v.to_string(),
                })
            })
            .collect();
        match args.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Rows {
                    rows: Vec<StirlingEntry>,
                }
                emit_doc("stirling", params, Rows { rows: entries });
            }
            Format::Csv => {
                let rows: Vec<Vec<String>> = entries
                    .into_iter()
                    .map(|e| vec![e.big_n.to_string(), e.big_k.to_string(), e.value])
                    .collect();
                emit(to_csv(&["N", "K", "value"], &rows));
            }
        }
        return Ok(());
    }
    let (Some(n), Some(k)) = (args.big_n, args.big_k) else {
        return Err(usage("stirling needs --N and --K, or --table MAX_N"));
    };
    let value = cache.get(args.kind, n, k, args.r).to_string();
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct One {
                value: String,
            }
            emit_doc("stirling", params, One { value });
        }
        Format::Csv => {
            let row = vec![args.kind.to_string(), n.to_string(), k.to_string(), args.r.to_string(), value];
            emit(to_csv(&["kind", "N", "K", "r", "value"], &[row]));
        }
    }
    Ok(())
}

// --------------------------------------------------------------- bernoulli

#[derive(Serialize)]
struct BernoulliParams {
    family: BernoulliFamily,
    n: usize,
    #[serde(with = "rational")]
    alpha: Rational,
    x: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<usize>,
    route: &'static str,
}

fn closed_value(args: &BernoulliArgs) -> Result<Rational, Failure> {
    if args.p.is_none() && args.q.is_none() {
        return Ok(bernoulli::evaluate_auto(args.family, args.n, &args.alpha, args.x));
    }
    let spec = EvalSpec::new(args.n, args.alpha.clone(), args.x)
        .with_p(args.p.unwrap_or(args.n))
        .with_q(args.q.unwrap_or(0));
    bernoulli::evaluate(args.family, &spec).map_err(lib_failure)
}

fn oracle_value(args: &BernoulliArgs) -> Result<Rational, Failure> {
    check_order(args.n + 1)?;
    Ok(oracle_eval(args.family, args.n, &args.alpha, args.x))
}

pub fn bernoulli(args: &BernoulliArgs) -> Outcome {
    if let Some(p) = args.p {
        if p < args.n {
            return Err(usage(format!("--p {p} must be at least --n {}", args.n)));
        }
    }
    let params = BernoulliParams {
        family: args.family,
        n: args.n,
        alpha: args.alpha.clone(),
        x: args.x,
        p: args.p,
        q: args.q,
        route: match args.route {
            Route::Closed => "closed",
            Route::Oracle => "oracle",
            Route::Both => "both",
        },
    };
    let single = |value: Rational| {
        match args.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Single {
                    value: Value,
                }
                emit_doc("bernoulli", &params, Single { value: Value(value) });
            }
            Format::Csv => emit(to_csv(&["value"], &[vec![format_rational(&value)]])),
        }
    };
    match args.route {
        Route::Closed => single(closed_value(args)?),
        Route::Oracle => single(oracle_value(args)?),
        Route::Both => {
            let closed = closed_value(args)?;
            let oracle = oracle_value(args)?;
            let agree = closed == oracle;
            match args.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Both {
                        closed: Value,
                        oracle: Value,
                        agree: bool,
                    }
                    emit_doc(
                        "bernoulli",
                        &params,
                        Both { closed: Value(closed), oracle: Value(oracle), agree },
                    );
                }
                Format::Csv => emit(to_csv(
                    &["closed", "oracle", "agree"],
                    &[vec![format_rational(&closed), format_rational(&oracle), agree.to_string()]],
                )),
            }
            if !agree {
                return Err(Failure::Falsified);
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------------ verify

#[derive(Serialize)]
struct VerifyParams {
    identity: bernstir::IdentityId,
    sign: bernstir::SignConvention,
    max_n: usize,
    max_k: usize,
    max_r: usize,
    max_q: usize,
    p_offsets: Vec<usize>,
    alphas: Vec<String>,
}

fn grid_from(args: &VerifyArgs) -> Grid {
    let mut grid = Grid::default_for(args.identity);
    if let Some(v) = args.max_n {
        grid.max_n = v;
    }
    if let Some(v) = args.max_k {
        grid.max_k = v;
    }
    if let Some(v) = args.max_r {
        grid.max_r = v;
    }
    if let Some(v) = args.max_q {
        grid.max_q = v;
    }
    if let Some(v) = &args.p_offsets {
        grid.p_offsets = v.clone();
    }
    if let Some(v) = &args.alphas {
        grid.alphas = v.clone();
    }
    grid
}

fn report_csv(report: &IdentityReport) -> String {
    let header = [
        "id", "sign", "checked", "failed", "n", "k", "r", "p", "q", "alpha", "x", "lhs", "rhs",
    ];
    let sign = report.sign.map_or(String::new(), |s| format!("{s:?}").to_lowercase());
    let summary = vec![
        report.id.to_string(),
        sign,
        report.checked.to_string(),
        report.failed.to_string(),
    ];
    let opt = |v: Option<usize>| v.map_or(String::new(), |v| v.to_string());
    let mut rows: Vec<Vec<String>> = report
        .failures
        .iter()
        .map(|f| {
            let mut row = summary.clone();
            row.extend([
                opt(f.point.n),
                opt(f.point.k),
                opt(f.point.r),
                opt(f.point.p),
                opt(f.point.q),
                f.point.alpha.as_ref().map_or(String::new(), format_rational),
                f.point.x.map_or(String::new(), |x| x.to_string()),
                format_rational(&f.lhs),
                format_rational(&f.rhs),
            ]);
            row
        })
        .collect();
    if rows.is_empty() {
        let mut row = summary;
        row.extend(std::iter::repeat_n(String::new(), header.len() - 4));
        rows.push(row);
    }
    to_csv(&header, &rows)
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let grid = grid_from(args);
    if grid.p_offsets.is_empty() {
        return Err(usage("--p-offsets must list at least one offset"));
    }
    if args.identity == bernstir::IdentityId::Carlitz {
        check_order(grid.max_n + 1)?;
    }
    if matches!(
        args.identity,
        bernstir::IdentityId::A5 | bernstir::IdentityId::A6 | bernstir::IdentityId::Remark2
    ) {
        check_order(grid.max_n + 1)?;
    }
    let report = identities::verify(args.identity, args.sign, &grid);
    let params = VerifyParams {
        identity: args.identity,
        sign: args.sign,
        max_n: grid.max_n,
        max_k: grid.max_k,
        max_r: grid.max_r,
        max_q: grid.max_q,
        p_offsets: grid.p_offsets.clone(),
        alphas: grid.alphas.iter().map(format_rational).collect(),
    };
    match args.format {
        Format::Json => emit_doc("verify", params, &report),
        Format::Csv => emit(report_csv(&report)),
    }
    if report.verified() {
        Ok(())
    } else {
        Err(Failure::Falsified)
    }
}

// ------------------------------------------------------------------- table

#[derive(Serialize)]
struct TableParams {
    table: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m_max: Option<usize>,
}

/// One table row: an index, named route values, and whether they agree.
struct Row {
    index: (&'static str, i64),
    routes: Vec<(&'static str, Rational)>,
}

impl Row {
    fn agree(&self) -> bool {
        self.routes.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

impl Serialize for Row {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.routes.len() + 2))?;
        map.serialize_entry(self.index.0, &self.index.1)?;
        for (name, value) in &self.routes {
            map.serialize_entry(name, &Value(value.clone()))?;
        }
        map.serialize_entry("agree", &self.agree())?;
        map.end()
    }
}

fn table_rows(args: &TableArgs) -> Result<Vec<Row>, Failure> {
    match args.kind {
        TableKind::Genocchi => {
            check_order(2 * args.max + 1)?;
            (1..=args.max)
                .map(|n| {
                    let routes = bernoulli::genocchi_routes(n).map_err(lib_failure)?;
                    Ok(Row {
                        index: ("n", n as i64),
                        routes: vec![
                            ("product", routes.product),
                            ("via_cycles", routes.via_cycles),
                            ("via_partitions", routes.via_partitions),
                        ],
                    })
                })
                .collect()
        }
        TableKind::BernoulliNumbers => {
            check_order(args.max + 1)?;
            Ok((0..=args.max)
                .map(|n| Row {
                    index: ("n", n as i64),
                    routes: vec![
                        ("oracle", oracle_eval(BernoulliFamily::FirstKind, n, &arith::int(1), 0)),
                        ("closed", bernoulli::bernoulli_first_at(n, 0)),
                        ("stirling_sum", bernoulli::bernoulli_first_via_partitions(n, 0)),
                    ],
                })
                .collect())
        }
        TableKind::EulerEven => {
            if args.n == 0 {
                return Err(usage("euler-even needs --n >= 1"));
            }
            if args.m_min > args.m_max {
                return Err(usage("--m-min must not exceed --m-max"));
            }
            check_order(args.n + 1)?;
            let n = args.n;
            let start = args.m_min + args.m_min % 2;
            (start..=args.m_max)
                .step_by(2)
                .map(|m| {
                    let m = m as i64;
                    let closed = bernoulli::euler_at_even(n, m).map_err(lib_failure)?;
                    let one = arith::int(1);
                    let b = |x: i64| oracle_eval(BernoulliFamily::FirstKind, n, &one, x);
                    let two_pow = arith::pow_rat(&arith::int(2), n);
                    let oracle = arith::ratio(2, n as i64) * (b(m) - two_pow * b(m / 2));
                    Ok(Row { index: ("m", m), routes: vec![("closed", closed), ("oracle", oracle)] })
                })
                .collect()
        }
    }
}

pub fn table(args: &TableArgs) -> Outcome {
    let rows = table_rows(args)?;
    let params = match args.kind {
        TableKind::Genocchi => TableParams { table: "genocchi", max: Some(args.max), n: None, m_min: None, m_max: None },
        TableKind::BernoulliNumbers => TableParams { table: "bernoulli-numbers", max: Some(args.max), n: None, m_min: None, m_max: None },
        TableKind::EulerEven => TableParams { table: "euler-even", max: None, n: Some(args.n), m_min: Some(args.m_min), m_max: Some(args.m_max) },
    };
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Rows<'a> {
                rows: &'a [Row],
            }
            emit_doc("table", params, Rows { rows: &rows });
        }
        Format::Csv => {
            let mut header = vec![rows.first().map_or("n", |r| r.index.0)];
            if let Some(first) = rows.first() {
                header.extend(first.routes.iter().map(|(name, _)| *name));
            }
            header.push("agree");
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut cells = vec![r.index.1.to_string()];
                    cells.extend(r.routes.iter().map(|(_, v)| format_rational(v)));
                    cells.push(r.agree().to_string());
                    cells
                })
                .collect();
            emit(to_csv(&header, &body));
        }
    }
    if rows.iter().all(Row::agree) {
        Ok(())
    } else {
        Err(Failure::Falsified)
    }
}
