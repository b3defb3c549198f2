use std::fmt::Write as _;

use num::{BigRational, Signed, ToPrimitive};
use serde_json::{json, Value};
use theta_lift::combinatorics::{
    enumerate_orbits, regular_holomorphic_orbit, theta_lift_diagram, zero_orbit, DualPair, SignedDiagram,
    DEFAULT_ENUMERATION_CAP,
};
use theta_lift::degree::{
    degree_report, dsquared_closed_form, dsquared_lhs_exact, leading_degree_form, monte_carlo_simplex,
    parse_rational, rational_string, selberg_closed_form, selberg_closed_form_f64, selberg_lhs_exact, DegreeReport,
    MonteCarlo, OrbitFamily, DEFAULT_FIT_MAX, DEFAULT_MONOMIAL_CAP,
};
use theta_lift::geometry::{lift_by_moment_maps, DEFAULT_RETRY_CAP};
use theta_lift::repdecomp::{
    decompose_general_lift, decompose_regular_hol_lift, decompose_trivial_lift, harmonics_series,
    nullcone_hilbert_check, GradedDecomposition, Side,
};
use theta_lift::{Error, Result};

use crate::config::{make_pair, parse_pair_spec, ConfigFile};
use crate::{Cli, Command, DegreeArgs, Format, GeometryCmd, Member, Method, OrbitsCmd, PairArgs, RingCmd, SelbergArgs, SideArg};

pub const DEFAULT_MAX_DEGREE: usize = 6;

pub struct Output {
    pub text: String,
    pub ok: bool,
}

struct Settings {
    cfg: ConfigFile,
    seed: u64,
    format: Option<Format>,
    monomial_cap: usize,
    retry_cap: usize,
}

impl Settings {
    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn pair(&self, args: &PairArgs) -> Result<DualPair> {
        let kind: String = self
            .cfg
            .pick_opt(args.pair.clone(), "pair")?
            .ok_or_else(|| Error::InvalidInput("missing --pair".into()))?;
        make_pair(
            &kind,
            self.cfg.pick_opt(args.p, "p")?,
            self.cfg.pick_opt(args.q, "q")?,
            self.cfg.pick_opt(args.m, "m")?,
            self.cfg.pick_opt(args.n, "n")?,
        )
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::StableRange(_)
        | Error::Parse(_)
        | Error::InvalidInput(_)
        | Error::IndexOutOfRange(_)
        | Error::ShapeMismatch(_)
        | Error::LiftInfeasible(_)
        | Error::NonPositiveKappa(_) => 2,
        _ => 1,
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

pub fn run(cli: &Cli) -> Result<Output> {
    let cfg = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    if let Some(t) = cfg.pick_opt(cli.threads, "threads")? {
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let format = match cli.format {
        Some(f) => Some(f),
        None => cfg.get::<Format>("format")?,
    };
    let s = Settings {
        seed: cfg.pick(cli.seed, "seed", 0)?,
        monomial_cap: cfg.pick(cli.monomial_cap, "monomial_cap", DEFAULT_MONOMIAL_CAP)?,
        retry_cap: cfg.pick(cli.retry_cap, "retry_cap", DEFAULT_RETRY_CAP)?,
        format,
        cfg,
    };
    match &cli.command {
        Command::Orbits { cmd } => orbits(&s, cmd),
        Command::Ring { cmd } => ring(&s, cmd),
        Command::Degree(args) => degree(&s, args),
        Command::Selberg(args) => selberg(&s, args),
        Command::Geometry { cmd } => geometry(&s, cmd),
    }
}

fn orbit_diagram(s: &Settings, pair: &DualPair, diagram: &Option<String>, orbit: &Option<String>) -> Result<SignedDiagram> {
    if let Some(text) = s.cfg.pick_opt(diagram.clone(), "diagram")? {
        return SignedDiagram::parse(pair.small_group(), &text);
    }
    match s.cfg.pick_opt::<String>(orbit.clone(), "orbit")? {
        Some(o) => match o.parse::<OrbitFamily>()? {
            OrbitFamily::Trivial => Ok(zero_orbit(pair)),
            OrbitFamily::RegularHol => regular_holomorphic_orbit(pair),
        },
        None => Err(Error::InvalidInput("give --diagram or --orbit".into())),
    }
}

fn orbits(s: &Settings, cmd: &OrbitsCmd) -> Result<Output> {
    match cmd {
        OrbitsCmd::List { pair, member } => {
            let pair = s.pair(pair)?;
            let group = match member {
                Member::Small => pair.small_group(),
                Member::Large => pair.large_group(),
            };
            let list = enumerate_orbits(group, DEFAULT_ENUMERATION_CAP)?;
            let text = match s.format(Format::Text) {
                Format::Json => json_text(&json!({
                    "pair": pair.label(),
                    "group": group.name(),
                    "count": list.len(),
                    "orbits": list.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut out = String::from("diagram,shape,plus,minus\n");
                    for d in &list {
                        let shape: Vec<String> = d.shape().iter().map(ToString::to_string).collect();
                        let (a, b) = d.signature();
                        let _ = writeln!(out, "\"{d}\",{},{a},{b}", shape.join(" "));
                    }
                    out
                }
                Format::Text => list.iter().map(|d| format!("{d}\n")).collect(),
            };
            Ok(Output { text, ok: true })
        }
        OrbitsCmd::Lift { pair, diagram, orbit } => {
            let pair = s.pair(pair)?;
            let d = orbit_diagram(s, &pair, diagram, orbit)?;
            let lift = theta_lift_diagram(&pair, &d)?;
            let text = match s.format(Format::Text) {
                Format::Json => json_text(&json!({
                    "pair": pair.label(),
                    "input": d.to_string(),
                    "lift": lift.to_string(),
                    "group": lift.group().name(),
                    "rows": lift.to_json()["rows"],
                })),
                Format::Csv => format!("pair,input,lift\n\"{pair}\",\"{d}\",\"{lift}\"\n"),
                Format::Text => format!("{lift}\n"),
            };
            Ok(Output { text, ok: true })
        }
    }
}

fn decomposition_output(s: &Settings, pair: &DualPair, source: &str, dec: &GradedDecomposition, ok: bool) -> Output {
    let hs = dec.hilbert_series();
    let text = match s.format(Format::Json) {
        Format::Json => json_text(&json!({
            "pair": pair.label(),
            "orbit": source,
            "truncation": dec.truncation,
            "multiplicity_free": dec.is_multiplicity_free(),
            "decomposition": dec.to_json(),
            "hilbert_series": hs.to_json(),
        })),
        Format::Csv => format!("{}\n{}", dec.to_csv(), hs.to_csv()),
        Format::Text => {
            let mut out = String::new();
            for k in 0..=dec.truncation {
                let labels: Vec<String> = dec
                    .degree(k)
                    .iter()
                    .map(|e| {
                        let mut l = e.plus.to_string();
                        if let Some(m) = &e.minus {
                            let _ = write!(l, " x {m}");
                        }
                        if !num::One::is_one(&e.mult) {
                            let _ = write!(l, " (mult {})", e.mult);
                        }
                        l
                    })
                    .collect();
                let _ = writeln!(out, "{k}\t{}\t{}", hs.coefficients[k], labels.join(" + "));
            }
            out
        }
    };
    Output { text, ok }
}

fn ring(s: &Settings, cmd: &RingCmd) -> Result<Output> {
    match cmd {
        RingCmd::Decompose { pair, orbit, diagram, input, max_degree } => {
            let pair = s.pair(pair)?;
            let k = s.cfg.pick(*max_degree, "max_degree", DEFAULT_MAX_DEGREE)?;
            if let Some(path) = input {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
                let value: Value =
                    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                let value = value.get("decomposition").cloned().unwrap_or(value);
                let inp = GradedDecomposition::from_json(&value)?;
                let dec = decompose_general_lift(&pair, &inp, k)?;
                return Ok(decomposition_output(s, &pair, "input", &dec, true));
            }
            let d = orbit_diagram(s, &pair, diagram, orbit)?;
            let (name, dec) = if d == zero_orbit(&pair) {
                ("trivial", decompose_trivial_lift(&pair, k)?)
            } else if regular_holomorphic_orbit(&pair).ok().as_ref() == Some(&d) {
                ("regular-hol", decompose_regular_hol_lift(&pair, k)?)
            } else {
                return Err(Error::InvalidInput(format!(
                    "{d}: built-in inputs cover the zero and regular holomorphic orbits; pass --input"
                )));
            };
            Ok(decomposition_output(s, &pair, name, &dec, true))
        }
        RingCmd::Harmonics { pair, side, max_degree } => {
            let pair = s.pair(pair)?;
            let k = s.cfg.pick(*max_degree, "max_degree", DEFAULT_MAX_DEGREE)?;
            let side = match side {
                SideArg::Plus => Side::Plus,
                SideArg::Minus => Side::Minus,
            };
            let dec = harmonics_series(&pair, side, k)?;
            let ok = nullcone_hilbert_check(&pair, side, k)?;
            let name = if side == Side::Plus { "harmonics-plus" } else { "harmonics-minus" };
            let mut out = decomposition_output(s, &pair, name, &dec, ok);
            if s.format(Format::Json) == Format::Json {
                let mut v: Value = serde_json::from_str(&out.text).expect("own output parses");
                v["complete_intersection_match"] = json!(ok);
                out.text = json_text(&v);
            }
            Ok(out)
        }
    }
}

fn orbit_families(s: &Settings, orbit: &Option<String>, pair: &DualPair) -> Result<Vec<OrbitFamily>> {
    let name: String = s.cfg.pick(orbit.clone(), "orbit", "all".to_string())?;
    if name == "all" {
        let mut v = vec![OrbitFamily::Trivial];
        if regular_holomorphic_orbit(pair).is_ok() {
            v.push(OrbitFamily::RegularHol);
        }
        Ok(v)
    } else {
        Ok(vec![name.parse()?])
    }
}

fn mc_json(mc: &MonteCarlo) -> Value {
    json!({"samples_estimate": mc.estimate, "std_error": mc.std_error, "exact": mc.exact, "within_3se": mc.within})
}

fn degree(s: &Settings, args: &DegreeArgs) -> Result<Output> {
    let pairs: Vec<DualPair> = match s.cfg.pick_opt(args.grid.clone(), "grid")? {
        Some(grid) => grid.split(';').filter(|t| !t.trim().is_empty()).map(|t| parse_pair_spec(t.trim())).collect::<Result<_>>()?,
        None => vec![s.pair(&args.pair)?],
    };
    let fit_max = match args.method {
        Method::Asymptotic | Method::Literal => 0,
        Method::Fit | Method::Both => s.cfg.pick(args.fit_max, "fit_max", DEFAULT_FIT_MAX)?,
    };
    let samples = s.cfg.pick_opt(args.monte_carlo, "monte_carlo")?;
    let mut reports = Vec::new();
    let mut ok = true;
    for pair in &pairs {
        for orbit in orbit_families(s, &args.orbit, pair)? {
            let r = degree_report(pair, orbit, s.monomial_cap, fit_max)?;
            ok &= r.asym_fit() != Some(false) && r.d_match() != Some(false);
            let mut j = r.to_json();
            if let Some(n) = samples {
                let form = leading_degree_form(pair, orbit, s.monomial_cap)?;
                let mc = monte_carlo_simplex(&form.polynomial, n, s.seed);
                ok &= mc.within;
                j["monte_carlo"] = mc_json(&mc);
            }
            reports.push((r, j));
        }
    }
    let text = match s.format(Format::Json) {
        Format::Json if reports.len() == 1 => json_text(&reports[0].1),
        Format::Json => json_text(&Value::Array(reports.iter().map(|(_, j)| j.clone()).collect())),
        Format::Csv => DegreeReport::to_csv(&reports.iter().map(|(r, _)| r.clone()).collect::<Vec<_>>()),
        Format::Text => {
            let mut out = String::new();
            for (r, _) in &reports {
                let fit = r
                    .hilbert_fit
                    .as_ref()
                    .map(|f| format!("{} (d={}, K={})", f.degree, f.d, f.truncation))
                    .unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    out,
                    "{} {}: asymptotic {}, hilbert_fit {}, literal {}, d {}",
                    r.pair,
                    r.orbit,
                    rational_string(&r.asymptotic),
                    fit,
                    rational_string(&r.literal),
                    r.d
                );
            }
            out
        }
    };
    Ok(Output { text, ok })
}

fn selberg(s: &Settings, args: &SelbergArgs) -> Result<Output> {
    let kappa = parse_rational(&args.kappa)?;
    if !kappa.is_positive() {
        return Err(Error::NonPositiveKappa(args.kappa.clone()));
    }
    if args.n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let integral = if args.dsquared { "dsquared" } else { "selberg" };
    let (closed, expansion, approx) = if kappa.is_integer() {
        let (c, e) = if args.dsquared {
            (dsquared_closed_form(args.n, &kappa)?, dsquared_lhs_exact(args.n, &kappa, s.monomial_cap)?)
        } else {
            (selberg_closed_form(args.n, &kappa)?, selberg_lhs_exact(args.n, &kappa, s.monomial_cap)?)
        };
        let approx = c.to_f64();
        (Some(c), Some(e), approx)
    } else if args.dsquared {
        return Err(Error::NotIntegral(format!("the determinant route needs integer kappa, got {}", args.kappa)));
    } else {
        (None, None, Some(selberg_closed_form_f64(args.n, kappa.to_f64().unwrap_or(f64::NAN))?))
    };
    let equal = match (&closed, &expansion) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let show = |q: &Option<BigRational>| q.as_ref().map(rational_string);
    let text = match s.format(Format::Json) {
        Format::Json => json_text(&json!({
            "integral": integral,
            "n": args.n,
            "kappa": rational_string(&kappa),
            "closed_form": show(&closed),
            "expansion": show(&expansion),
            "closed_form_f64": approx,
            "equal": equal,
        })),
        Format::Csv => format!(
            "integral,n,kappa,closed_form,expansion,equal\n{integral},{},{},{},{},{}\n",
            args.n,
            rational_string(&kappa),
            show(&closed).unwrap_or_else(|| approx.map(|x| x.to_string()).unwrap_or_default()),
            show(&expansion).unwrap_or_default(),
            equal.map(|b| b.to_string()).unwrap_or_default()
        ),
        Format::Text => match (&closed, &expansion, equal) {
            (Some(a), Some(b), Some(eq)) => format!("{} = {}, equal:{eq}\n", rational_string(a), rational_string(b)),
            _ => format!("{}\n", approx.unwrap_or(f64::NAN)),
        },
    };
    Ok(Output { text, ok: equal != Some(false) })
}

fn geometry(s: &Settings, cmd: &GeometryCmd) -> Result<Output> {
    let GeometryCmd::CheckLift { pair, diagram, all } = cmd;
    let pair = s.pair(pair)?;
    let diagrams = if *all {
        enumerate_orbits(pair.small_group(), DEFAULT_ENUMERATION_CAP)?
    } else {
        match s.cfg.pick_opt(diagram.clone(), "diagram")? {
            Some(t) => vec![SignedDiagram::parse(pair.small_group(), &t)?],
            None => return Err(Error::InvalidInput("give --diagram or --all".into())),
        }
    };
    let mut rows = Vec::new();
    let mut all_ok = true;
    for d in &diagrams {
        let expected = theta_lift_diagram(&pair, d)?;
        let got = lift_by_moment_maps(&pair, d, s.seed, s.retry_cap)?;
        let ok = got == expected;
        all_ok &= ok;
        rows.push((d.to_string(), expected.to_string(), got.to_string(), ok));
    }
    let text = match s.format(Format::Json) {
        Format::Json => json_text(&json!({
            "pair": pair.label(),
            "seed": s.seed,
            "results": rows.iter().map(|(d, e, g, ok)| json!({
                "diagram": d, "expected": e, "moment_map": g, "ok": ok,
            })).collect::<Vec<_>>(),
            "all_ok": all_ok,
        })),
        Format::Csv => {
            let mut out = String::from("diagram,expected,moment_map,ok\n");
            for (d, e, g, ok) in &rows {
                let _ = writeln!(out, "\"{d}\",\"{e}\",\"{g}\",{ok}");
            }
            out
        }
        Format::Text => rows.iter().map(|(d, _, g, ok)| format!("{d} -> {g}: {ok}\n")).collect(),
    };
    Ok(Output { text, ok: all_ok })
}
