use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qblocks::abacus::{abacus_profile, e_core, e_quotient, e_weight, is_e_core};
use qblocks::blocks::{is_block, is_core_block, s_core_of_block, Limits, Multicharge};
use qblocks::bounds::{ideal_bound, n_bounds, n_closed_form, n_exact, BoundLimits, Strategy};
use qblocks::multipartition::{multi_block, multi_weight, multicore_of, Multipartition, WeightMethod};
use qblocks::partition::{charge_weight, residue_counts};
use qblocks::shift::{
    is_stuttering_block, is_stuttering_partition, pi_project, shift_block_membership, sigma_block, sigma_core,
    sigma_partition, ShiftParam,
};
use qblocks::verify::{self, Config, Suite};
use qblocks::{BlockVector, Charge, Error, ErrorKind, Modulus, Partition};

#[derive(Parser)]
#[command(name = "qblocks", version, about = "Partitions, cores, blocks and the constant N(r,e)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args)]
struct Level {
    /// Modulus (0 means e = ∞).
    #[arg(short = 'e', allow_hyphen_values = true)]
    e: Modulus,
    /// Charge.
    #[arg(short = 's', default_value_t = 0, allow_hyphen_values = true)]
    s: Charge,
    /// Multicharge, e.g. "0,1"; replaces -s.
    #[arg(short = 'S', allow_hyphen_values = true)]
    multicharge: Option<Multicharge>,
}

impl Level {
    fn charges(&self) -> Multicharge {
        self.multicharge.clone().unwrap_or_else(|| Multicharge::single(self.s))
    }
}

#[derive(Subcommand)]
enum Command {
    /// The e-core of a partition, or the multicore of a multipartition.
    Core {
        #[command(flatten)]
        level: Level,
        /// Partition "4,3,3,1" ("-" for ∅) or multipartition "2,1|-".
        literal: String,
    },
    /// The e-quotient, read at charge s.
    Quotient {
        #[command(flatten)]
        level: Level,
        literal: String,
    },
    /// The e-weight of a partition, or the weight of a multipartition at -S.
    Weight {
        #[command(flatten)]
        level: Level,
        literal: String,
    },
    /// The block α^S of a (multi)partition.
    Block {
        #[command(flatten)]
        level: Level,
        literal: String,
    },
    /// Weight, membership, core-block status and S-core of an element of Q.
    Score {
        #[command(flatten)]
        level: Level,
        /// Coefficients "c_0,…,c_{e-1}" (or "i:c,…" when e = 0).
        alpha: String,
    },
    /// The shift σ of order e/gcd(e,ê), at charge 0.
    Shift {
        #[arg(short = 'e')]
        e: Modulus,
        #[arg(long)]
        ehat: u32,
        /// Read the literal as an element of Q instead of a partition.
        #[arg(long)]
        block: bool,
        literal: String,
    },
    /// Render the charged e-abacus.
    Abacus {
        #[command(flatten)]
        level: Level,
        literal: String,
    },
    /// N(r,e): exact value, closed form and bounds. r and e may be ranges "a-b".
    Bound {
        r: String,
        e: String,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        bounds: bool,
        /// Search over all subsets instead of equal-size ones.
        #[arg(long)]
        full: bool,
    },
    /// Run a verification suite ("all" for every suite).
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_e: Option<u32>,
        #[arg(long)]
        max_r: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// One result in all three formats.
struct Output {
    text: String,
    json: Value,
    tsv: String,
    ok: bool,
}

impl Output {
    fn simple(key: &str, value: String) -> Self {
        Output { text: value.clone(), json: json!({ key: value }), tsv: format!("{key}\n{value}"), ok: true }
    }

    fn rows(keys: &[&str], rows: Vec<Vec<String>>, text: String) -> Self {
        let json = Value::Array(
            rows.iter()
                .map(|r| Value::Object(keys.iter().zip(r).map(|(k, v)| (k.to_string(), json!(v))).collect()))
                .collect(),
        );
        let mut tsv = keys.join("\t");
        for r in &rows {
            tsv.push('\n');
            tsv.push_str(&r.join("\t"));
        }
        Output { text, json, tsv, ok: true }
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn is_multi(literal: &str, level: &Level) -> bool {
    literal.contains('|') || level.multicharge.as_ref().is_some_and(|m| m.level() > 1)
}

fn parse_partition(s: &str) -> qblocks::Result<Partition> {
    s.parse()
}

fn cmd_core(level: &Level, literal: &str) -> qblocks::Result<Output> {
    if is_multi(literal, level) {
        let l: Multipartition = literal.parse()?;
        return Ok(Output::simple("multicore", multicore_of(&l, level.e)?.to_string()));
    }
    let l = parse_partition(literal)?;
    Ok(Output::simple("core", e_core(&l, level.e)?.to_string()))
}

fn cmd_quotient(level: &Level, literal: &str) -> qblocks::Result<Output> {
    let l = parse_partition(literal)?;
    Ok(Output::simple("quotient", e_quotient(&l, level.s, level.e)?.to_string()))
}

fn cmd_weight(level: &Level, literal: &str) -> qblocks::Result<Output> {
    if is_multi(literal, level) {
        let l: Multipartition = literal.parse()?;
        let w = multi_weight(&l, &level.charges(), level.e, WeightMethod::Definition)?;
        return Ok(Output::simple("weight", w.to_string()));
    }
    let l = parse_partition(literal)?;
    let w = if level.e.is_infinite() { charge_weight(&l, level.s, level.e) } else { e_weight(&l, level.e) };
    Ok(Output::simple("weight", w.to_string()))
}

fn cmd_block(level: &Level, literal: &str) -> qblocks::Result<Output> {
    let alpha = if is_multi(literal, level) {
        let l: Multipartition = literal.parse()?;
        multi_block(&l, &level.charges(), level.e)?
    } else {
        residue_counts(&parse_partition(literal)?, level.s, level.e)
    };
    Ok(Output {
        text: format!("{alpha}\n{}", alpha.pretty()),
        json: serde_json::to_value(&alpha).expect("serialisable"),
        tsv: format!("block\tpretty\n{alpha}\t{}", alpha.pretty()),
        ok: true,
    })
}

fn cmd_score(level: &Level, alpha: &str) -> qblocks::Result<Output> {
    let a = BlockVector::parse(level.e, alpha)?;
    let s = level.charges();
    let limits = Limits::default();
    let w = a.weight(s.charges());
    let member = is_block(&a, &s, &limits)?;
    let core_block = is_core_block(&a, &s, &limits)?;
    let score = if level.e.is_infinite() { None } else { Some(s_core_of_block(&a, &s, &limits)?) };
    let (sc, h) = match &score {
        Some((c, h)) => (c.to_string(), h.to_string()),
        None => ("-".into(), "-".into()),
    };
    let keys = ["alpha", "weight", "block", "core_block", "s_core", "h"];
    let row = vec![a.to_string(), w.to_string(), yes(member), yes(core_block), sc.clone(), h.clone()];
    let text = format!("weight {w}\nblock {}\ncore-block {}\ns-core {sc} (h={h})", yes(member), yes(core_block));
    let mut out = Output::rows(&keys, vec![row], text);
    out.json = out.json[0].take();
    Ok(out)
}

fn cmd_shift(e: Modulus, ehat: u32, block: bool, literal: &str) -> qblocks::Result<Output> {
    let p = ShiftParam::new(e, ehat)?;
    let mut keys = vec![];
    let mut row = vec![];
    if block {
        let a = BlockVector::parse(e, literal)?;
        keys.extend(["sigma", "stuttering", "class"]);
        row.push(sigma_block(&a, &p)?.to_string());
        row.push(yes(is_stuttering_block(&a, &p)?));
        row.push(match shift_block_membership(&a, &p) {
            Ok(c) => c.to_string(),
            Err(Error::NotABlock(_)) => "-".into(),
            Err(err) => return Err(err),
        });
        if p.divides() {
            keys.push("pi");
            row.push(pi_project(&a, &p)?.to_string());
        }
    } else {
        let l = parse_partition(literal)?;
        keys.extend(["sigma", "stuttering"]);
        row.push(sigma_partition(&l, &p).to_string());
        row.push(yes(is_stuttering_partition(&l, &p)));
        if is_e_core(&l, e) {
            keys.push("sigma_core");
            row.push(sigma_core(&l, &p)?.to_string());
        }
    }
    let text = keys.iter().zip(&row).map(|(k, v)| format!("{k} {v}")).collect::<Vec<_>>().join("\n");
    let mut out = Output::rows(&keys, vec![row], text);
    out.json = out.json[0].take();
    Ok(out)
}

fn cmd_abacus(level: &Level, literal: &str) -> qblocks::Result<Output> {
    let l = parse_partition(literal)?;
    let ab = abacus_profile(&l, level.s, level.e)?;
    let r = ab.render();
    let r = r.trim_end().to_string();
    Ok(Output { text: r.clone(), json: json!({ "abacus": r, "charge": level.s, "e": level.e.get() }), tsv: r, ok: true })
}

fn parse_range<T: std::str::FromStr + Copy + Into<u64> + TryFrom<u64>>(s: &str) -> qblocks::Result<Vec<T>> {
    let bad = || Error::Parse(format!("range {s:?}"));
    let p = |t: &str| t.trim().parse::<T>().map_err(|_| bad());
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (p(a)?, p(b)?),
        None => (p(s)?, p(s)?),
    };
    let (a, b) = (a.into(), b.into());
    if a > b {
        return Err(bad());
    }
    (a..=b).map(|v| T::try_from(v).map_err(|_| bad())).collect()
}

fn cmd_bound(r: &str, e: &str, exact: bool, closed: bool, bounds: bool, full: bool) -> qblocks::Result<Output> {
    let rs: Vec<u64> = parse_range(r)?;
    let es: Vec<u32> = parse_range(e)?;
    let strategy = if full { Strategy::Full } else { Strategy::EqualSize };
    let all = !(exact || closed || bounds);
    let limits = BoundLimits::default();
    // label lines once more than one (r, e) is asked for
    let labelled = rs.len() * es.len() > 1;
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for &r in &rs {
        let r = r as usize;
        for &e in &es {
            let mut row = vec![r.to_string(), e.to_string()];
            let mut line = Vec::new();
            let (n, witness) = if exact || all {
                let n = n_exact(r, e, strategy, &limits)?;
                (n.value.to_string(), n.witness.to_string())
            } else {
                ("-".into(), "-".into())
            };
            let (lo, hi) = if (bounds || all) && r >= 2 && e >= 2 {
                let (lo, hi) = n_bounds(r, e)?;
                (lo.to_string(), hi.to_string())
            } else if bounds {
                return Err(Error::InvalidArgument("bounds need r, e ≥ 2".into()));
            } else {
                ("-".into(), "-".into())
            };
            let cf = if closed || all {
                n_closed_form(r, e).map_or("-".to_string(), |v| v.to_string())
            } else {
                "-".into()
            };
            if exact {
                line.push(n.clone());
            }
            if closed {
                line.push(cf.clone());
            }
            if bounds {
                line.push(format!("{lo} {hi}"));
            }
            if all {
                line.push(format!("N({r},{e}) = {n}  bounds [{lo}, {hi}]  closed {cf}  N′ {}  witness {witness}", ideal_bound(r, e)));
            }
            row.extend([n, lo, hi, cf, witness]);
            rows.push(row);
            if labelled && !all {
                line.insert(0, format!("{r} {e}"));
            }
            text.push(line.join(" "));
        }
    }
    Ok(Output::rows(&["r", "e", "N", "lower", "upper", "closed_form", "witness"], rows, text.join("\n")))
}

fn cmd_verify(suite: &str, cfg: Config) -> qblocks::Result<Output> {
    let suites = Suite::parse_selection(suite)?;
    let reports = verify::run(&suites, &cfg)?;
    let ok = reports.iter().all(|r| r.passed());
    let mut text = Vec::new();
    let mut tsv = vec!["suite\tcase\tpassed\tdetail\tcounterexample".to_string()];
    for r in &reports {
        let fails = r.failures().count();
        text.push(format!("{}: {} ({} cases, {} failed)", r.suite, if r.passed() { "pass" } else { "FAIL" }, r.cases.len(), fails));
        for c in r.failures() {
            text.push(format!("  {}: {} [{}]", c.id, c.detail, c.counterexample.as_deref().unwrap_or("")));
        }
        for c in &r.cases {
            tsv.push(format!(
                "{}\t{}\t{}\t{}\t{}",
                r.suite,
                c.id,
                c.passed,
                c.detail,
                c.counterexample.as_deref().unwrap_or("")
            ));
        }
    }
    text.push(if ok { "all passed".into() } else { "FAILED".into() });
    Ok(Output {
        text: text.join("\n"),
        json: json!({ "passed": ok, "config": cfg, "reports": reports }),
        tsv: tsv.join("\n"),
        ok,
    })
}

fn run(cli: &Cli) -> qblocks::Result<Output> {
    match &cli.command {
        Command::Core { level, literal } => cmd_core(level, literal),
        Command::Quotient { level, literal } => cmd_quotient(level, literal),
        Command::Weight { level, literal } => cmd_weight(level, literal),
        Command::Block { level, literal } => cmd_block(level, literal),
        Command::Score { level, alpha } => cmd_score(level, alpha),
        Command::Shift { e, ehat, block, literal } => cmd_shift(*e, *ehat, *block, literal),
        Command::Abacus { level, literal } => cmd_abacus(level, literal),
        Command::Bound { r, e, exact, closed, bounds, full } => cmd_bound(r, e, *exact, *closed, *bounds, *full),
        Command::Verify { suite, max_n, max_e, max_r, seed } => {
            let d = Config::default();
            let cfg = Config {
                max_n: max_n.unwrap_or(d.max_n),
                max_e: max_e.unwrap_or(d.max_e),
                max_r: max_r.unwrap_or(d.max_r),
                seed: seed.unwrap_or(d.seed),
                ..d
            };
            cmd_verify(suite, cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serialisable"),
                Format::Tsv => out.tsv,
            };
            let _ = writeln!(std::io::stdout(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err.kind() {
                ErrorKind::Domain => 1,
                ErrorKind::Usage => 2,
                ErrorKind::Resource => 3,
            })
        }
    }
}
