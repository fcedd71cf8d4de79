//! Argument parsing, dispatch and report assembly for the `monoidrep` binary.
//!
//! Every command produces a JSON value; the text format is rendered from it. Exit codes: 2 for
//! unreadable input, 3 for a violated precondition, 4 for an exhausted or impossible closure.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use monoidrep_clifford::{normal_subring_check, quotient_structure_check, stability_submonoids, theorem_theta4_check, CliffordError};
use monoidrep_core::builtin::by_name;
use monoidrep_core::centric::is_centric;
use monoidrep_core::green::verify_mackey;
use monoidrep_core::io::parse_monoid_json;
use monoidrep_core::random::{random_submonoid, random_transformation_monoid, rng};
use monoidrep_core::{mackey_decompose, FiniteMonoid, GreenData, MonoidError, Submonoid};
use monoidrep_rep::catalog::{linear_characters, BasicProvider, ChainProvider, IrrProvider};
use monoidrep_rep::io::RepFile;
use monoidrep_rep::{cmp_irreducibles, is_semisimple, RepError, Representation};
use monoidrep_symext::{commutant_certificate, sn_character, symmetric_extension, theorem_theta1_check, SymExtError};
use monoidrep_symrep::{bruhat_length, parse_cycles, specht, Partition, SymError, SymProvider};
use monoidrep_theta::{
    is_theta, left_class_bimodule, proposition_theta_battery, random_bimodule, regular_bimodule, BimoduleRep, ThetaError,
};
use serde_json::{json, Value};
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError { code: 2, message: msg.into() }
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        CliError { code: 3, message: msg.into() }
    }
    pub fn budget(msg: impl Into<String>) -> Self {
        CliError { code: 4, message: msg.into() }
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        CliError { code: 1, message: msg.into() }
    }
}

impl From<MonoidError> for CliError {
    fn from(e: MonoidError) -> Self {
        match e {
            MonoidError::Parse(_) | MonoidError::Shape | MonoidError::Identity(_) | MonoidError::NotAssociative(..) => CliError::parse(e.to_string()),
            _ => CliError::precondition(e.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::Parse(_) | RepError::Dimension(_) | RepError::NotHomomorphism(_) => CliError::parse(e.to_string()),
            _ => CliError::precondition(e.to_string()),
        }
    }
}

impl From<CliffordError> for CliError {
    fn from(e: CliffordError) -> Self {
        match e {
            CliffordError::Monoid(m) => m.into(),
            CliffordError::Rep(r) => r.into(),
            CliffordError::Invariant(_) => CliError::internal(e.to_string()),
            _ => CliError::precondition(e.to_string()),
        }
    }
}

impl From<ThetaError> for CliError {
    fn from(e: ThetaError) -> Self {
        match e {
            ThetaError::Monoid(m) => m.into(),
            ThetaError::Rep(r) => r.into(),
            ThetaError::Clifford(c) => c.into(),
            ThetaError::Invariant(_) => CliError::internal(e.to_string()),
            ThetaError::NotBimodule(_) => CliError::parse(e.to_string()),
            _ => CliError::precondition(e.to_string()),
        }
    }
}

impl From<SymExtError> for CliError {
    fn from(e: SymExtError) -> Self {
        match e {
            SymExtError::BudgetExceeded { .. } | SymExtError::Infinite(_) => CliError::budget(e.to_string()),
            SymExtError::Monoid(m) => m.into(),
            SymExtError::Rep(r) => r.into(),
            SymExtError::Theta(t) => t.into(),
            SymExtError::Inconsistent(_) => CliError::internal(e.to_string()),
            _ => CliError::precondition(e.to_string()),
        }
    }
}

impl From<SymError> for CliError {
    fn from(e: SymError) -> Self {
        match e {
            SymError::Parse(_) | SymError::BadPartition(_) => CliError::parse(e.to_string()),
            SymError::Rep(r) => r.into(),
            _ => CliError::precondition(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "monoidrep", version, about = "Exact representation theory of finite monoids")]
pub struct Cli {
    /// Output format; JSON is the stable contract and text is rendered from it.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add the wall time in milliseconds (makes the output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relative Green classes J^{(N,K)} with α, β and |H|.
    Green {
        /// Built-in name (c3, s3, is2, t2, ...) or a JSON file.
        #[arg(long)]
        monoid: String,
        /// Submonoid selector: all, trivial, units, idempotents, gen:i,j,.. or elems:i,j,..
        #[arg(long = "N", default_value = "all")]
        n: String,
        #[arg(long = "K", default_value = "all")]
        k: String,
    },
    /// Mackey cells x_i∘H∘y_j for (N, K), or for random pairs over random monoids.
    Mackey {
        #[arg(long)]
        monoid: Option<String>,
        #[arg(long = "N", default_value = "all")]
        n: String,
        #[arg(long = "K", default_value = "all")]
        k: String,
        /// Number of random (M, N, K) triples instead of --monoid.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Irreducible representations with apexes.
    Irr {
        #[arg(long)]
        monoid: String,
    },
    /// Sandwich-matrix semisimplicity certificate, cross-checked by Σ dim².
    Semisimple {
        #[arg(long)]
        monoid: String,
    },
    /// Theta test of a bimodule: regular, left-class, from a file, or random.
    Theta {
        /// ℂ[M] as an M×M bimodule.
        #[arg(long)]
        regular: Option<String>,
        /// ℂ[L_e] as an M×G_e bimodule; needs --idempotent.
        #[arg(long)]
        left_class: Option<String>,
        #[arg(long)]
        idempotent: Option<usize>,
        /// Representation file over M1×M2 with --m1 and --m2.
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        m1: Option<String>,
        #[arg(long)]
        m2: Option<String>,
        /// Random bimodule from the seed.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also run the commutant battery.
        #[arg(long)]
        battery: bool,
    },
    /// ss(M) against ss(N) and ss(M/N), quotient structure, normal subring and stability.
    Clifford {
        #[arg(long)]
        monoid: String,
        #[arg(long = "N")]
        n: String,
        /// Index of σ in Irr(N) for the stability submonoids.
        #[arg(long)]
        sigma: Option<usize>,
    },
    /// The closure G^⊙n with its dictionary.
    Symext {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = monoidrep_symext::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// V^{⊗n} over G^⊙n × S_n.
    Theta1 {
        #[arg(long)]
        group: String,
        /// standard, trivial, sign, irr:K or a representation file.
        #[arg(long)]
        rep: String,
        #[arg(long)]
        n: usize,
        /// Character of S_n twisting the slot action: trivial or sign.
        #[arg(long, default_value = "trivial")]
        chi: String,
        #[arg(long, default_value_t = monoidrep_symext::DEFAULT_BUDGET)]
        budget: usize,
        /// Only the commutant certificate, which needs no closure.
        #[arg(long)]
        certificate_only: bool,
    },
    /// Bruhat length of a permutation in cycle notation ("1234", "(12)(34)").
    Bruhat {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Green { .. } => "green",
            Command::Mackey { .. } => "mackey",
            Command::Irr { .. } => "irr",
            Command::Semisimple { .. } => "semisimple",
            Command::Theta { .. } => "theta",
            Command::Clifford { .. } => "clifford",
            Command::Symext { .. } => "symext",
            Command::Theta1 { .. } => "theta1",
            Command::Bruhat { .. } => "bruhat",
        }
    }
}

pub fn provider() -> ChainProvider<'static> {
    ChainProvider(vec![&SymProvider, &BasicProvider])
}

pub fn load_monoid(spec: &str) -> Result<FiniteMonoid> {
    if let Some(m) = by_name(spec) {
        return Ok(m);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::parse(format!("{spec:?} is neither a built-in monoid nor a readable file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{spec}: {e}")))?;
    parse_monoid_json(&text).map_err(|e| CliError::parse(format!("{spec}: {e}")))
}

fn index_list(s: &str, m: &FiniteMonoid) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let v: usize = t.trim().parse().map_err(|_| CliError::parse(format!("bad element index {t:?}")))?;
            if v >= m.size() {
                return Err(CliError::parse(format!("element {v} out of range 0..{}", m.size())));
            }
            Ok(v)
        })
        .collect()
}

pub fn select_submonoid(m: &FiniteMonoid, sel: &str) -> Result<Submonoid> {
    Ok(match sel {
        "all" => Submonoid::whole(m),
        "trivial" => Submonoid::trivial(m),
        "units" => Submonoid::units(m),
        "idempotents" => Submonoid::generated(m, &m.idempotents()),
        s if s.starts_with("gen:") => Submonoid::generated(m, &index_list(&s[4..], m)?),
        s if s.starts_with("elems:") => Submonoid::new(m, &index_list(&s[6..], m)?)?,
        s => return Err(CliError::parse(format!("unknown submonoid selector {s:?}"))),
    })
}

fn labels(m: &FiniteMonoid, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| m.label(x)).collect()
}

fn green_json(m: &FiniteMonoid, g: &GreenData) -> Value {
    let classes: Vec<Value> = g
        .classes()
        .iter()
        .map(|c| {
            json!({
                "rep": c.rep,
                "label": m.label(c.rep),
                "size": c.members.len(),
                "alpha": c.alpha(),
                "beta": c.beta(),
                "h": c.h_class.len(),
                "regular": c.is_regular(m),
                "members": labels(m, &c.members),
            })
        })
        .collect();
    let consistent = g.classes().iter().all(|c| c.members.len() == c.alpha() * c.beta() * c.h_class.len());
    json!({ "order": m.size(), "classes": classes, "size_identity_holds": consistent })
}

fn mackey_json(m: &FiniteMonoid, n: &Submonoid, k: &Submonoid) -> Value {
    let cells = mackey_decompose(m, n, k);
    let verified = verify_mackey(m, &cells);
    json!({
        "order": m.size(),
        "cells": cells.iter().map(|c| json!({
            "rep": c.class.rep,
            "alpha": c.class.alpha(),
            "beta": c.class.beta(),
            "h": c.class.h_class.len(),
            "blocks": c.blocks,
        })).collect::<Vec<_>>(),
        "verified": verified.is_ok(),
        "violation": verified.err(),
    })
}

fn pick_rep(g: &Arc<FiniteMonoid>, spec: &str) -> Result<Representation> {
    let nontrivial_linear = || {
        let mut c = linear_characters(g);
        c.retain(|r| !r.matrices().iter().all(|a| a.is_identity()));
        c.into_iter().next()
    };
    match spec {
        "trivial" => Ok(Representation::trivial(g.clone())),
        "sign" | "nontrivial" => nontrivial_linear().ok_or_else(|| CliError::precondition("the group has no nontrivial linear character")),
        "standard" => {
            let k = (1..=6).find(|&k| (1..=k).product::<usize>() == g.size()).unwrap_or(0);
            let s = monoidrep_core::builtin::symmetric_group(k);
            if k < 2 || s.table() != g.table() {
                return Err(CliError::precondition("\"standard\" needs a built-in symmetric group"));
            }
            Ok(specht(&Partition::new(vec![k - 1, 1])?).rebase(g.clone()))
        }
        s if s.starts_with("irr:") => {
            let i: usize = s[4..].parse().map_err(|_| CliError::parse(format!("bad index in {s:?}")))?;
            let cat = provider().irreducibles(g).ok_or_else(|| CliError::precondition("no catalog for this group"))?;
            cat.get(i).cloned().ok_or_else(|| CliError::parse(format!("irr:{i} out of range (catalog has {})", cat.len())))
        }
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{path}: {e}")))?;
            let f: RepFile = serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{path}: {e}")))?;
            Ok(f.to_representation_over(g.clone())?)
        }
    }
}

fn theta_json(pi: &BimoduleRep, battery: bool) -> Result<Value> {
    let r = is_theta(pi)?;
    let mut v = r.to_json();
    v["dim"] = json!(pi.dim());
    v["semisimple"] = json!(pi.semisimple);
    if battery {
        v["battery"] = serde_json::to_value(proposition_theta_battery(pi)?).expect("serializable");
    }
    Ok(v)
}

pub fn run(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Green { monoid, n, k } => {
            let m = load_monoid(monoid)?;
            let (n, k) = (select_submonoid(&m, n)?, select_submonoid(&m, k)?);
            Ok(green_json(&m, &GreenData::new(&m, &n, &k)))
        }
        Command::Mackey { monoid, n, k, random, seed } => match (monoid, random) {
            (Some(name), None) => {
                let m = load_monoid(name)?;
                let (n, k) = (select_submonoid(&m, n)?, select_submonoid(&m, k)?);
                Ok(mackey_json(&m, &n, &k))
            }
            (None, Some(count)) => {
                let mut r = rng(*seed);
                let runs: Vec<Value> = (0..*count)
                    .map(|_| {
                        let m = random_transformation_monoid(&mut r, 24);
                        let (n, k) = (random_submonoid(&mut r, &m), random_submonoid(&mut r, &m));
                        let mut v = mackey_json(&m, &n, &k);
                        v["N"] = json!(n.members());
                        v["K"] = json!(k.members());
                        v
                    })
                    .collect();
                let all = runs.iter().all(|v| v["verified"] == true);
                Ok(json!({ "seed": seed, "runs": runs, "all_verified": all }))
            }
            _ => Err(CliError::parse("mackey needs exactly one of --monoid and --random")),
        },
        Command::Irr { monoid } => {
            let m = Arc::new(load_monoid(monoid)?);
            let irr = cmp_irreducibles(&m, &provider())?;
            let dims: Vec<usize> = irr.iter().map(|c| c.rep.dim()).collect();
            Ok(json!({
                "order": m.size(),
                "irreducibles": irr.iter().enumerate().map(|(i, c)| json!({
                    "index": i,
                    "dim": c.rep.dim(),
                    "apex": c.apex,
                    "apex_label": m.label(c.apex),
                    "class": c.class,
                    "sigma_index": c.sigma_index,
                })).collect::<Vec<_>>(),
                "dimension_sum": dims.iter().map(|d| d * d).sum::<usize>(),
            }))
        }
        Command::Semisimple { monoid } => {
            let m = Arc::new(load_monoid(monoid)?);
            let mut cert = is_semisimple(&m);
            cert.dimension_sum = cmp_irreducibles(&m, &provider()).ok().map(|irr| irr.iter().map(|c| c.rep.dim().pow(2)).sum());
            let cross = cert.cross_check();
            let mut v = serde_json::to_value(&cert).expect("serializable");
            v["cross_check"] = json!(cross);
            Ok(v)
        }
        Command::Theta { regular, left_class, idempotent, rep, m1, m2, random, seed, battery } => {
            let p = provider();
            let pi = match (regular, left_class, rep, random) {
                (Some(name), None, None, false) => regular_bimodule(&Arc::new(load_monoid(name)?), &p)?,
                (None, Some(name), None, false) => {
                    let m = Arc::new(load_monoid(name)?);
                    let e = idempotent.ok_or_else(|| CliError::parse("--left-class needs --idempotent"))?;
                    if e >= m.size() || !m.is_idempotent(e) {
                        return Err(CliError::precondition(format!("element {e} is not an idempotent")));
                    }
                    left_class_bimodule(&m, e, &p)?
                }
                (None, None, Some(path), false) => {
                    let (a, b) = match (m1, m2) {
                        (Some(a), Some(b)) => (Arc::new(load_monoid(a)?), Arc::new(load_monoid(b)?)),
                        _ => return Err(CliError::parse("--rep needs --m1 and --m2")),
                    };
                    let product = Arc::new(monoidrep_theta::product_monoid(&a, &b));
                    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{path}: {e}")))?;
                    let f: RepFile = serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{path}: {e}")))?;
                    BimoduleRep::new(a, b, f.to_representation_over(product)?, &p)?
                }
                (None, None, None, true) => random_bimodule(&mut rng(*seed), 10, 10, &p)?,
                _ => return Err(CliError::parse("theta needs exactly one of --regular, --left-class, --rep, --random")),
            };
            theta_json(&pi, *battery)
        }
        Command::Clifford { monoid, n, sigma } => {
            let m = Arc::new(load_monoid(monoid)?);
            let n = select_submonoid(&m, n)?;
            if !is_centric(&m, &n) {
                return Err(CliError::precondition("N is not centric in M"));
            }
            let theta4 = theorem_theta4_check(&m, &n)?;
            let structure = quotient_structure_check(&m, &n)?;
            let normal = match normal_subring_check(&m, &n, &provider()) {
                Ok(r) => serde_json::to_value(r).expect("serializable"),
                Err(CliffordError::NotSemisimple(why)) => json!({ "skipped": why }),
                Err(e) => return Err(e.into()),
            };
            let stability = match sigma {
                None => Value::Null,
                Some(i) => {
                    let nm = Arc::new(n.as_monoid(&m));
                    let irr = cmp_irreducibles(&nm, &provider())?;
                    let s = irr.get(*i).ok_or_else(|| CliError::parse(format!("σ index {i} out of range (Irr(N) has {})", irr.len())))?;
                    let st = stability_submonoids(&m, &n, &s.rep)?;
                    json!({
                        "apex": st.apex, "i_l": st.i_l, "i_r": st.i_r, "i_lr": st.i_lr, "j0": st.j0, "j1": st.j1,
                        "i0": st.i0, "i1": st.i1, "i_m": st.i_m, "j_m": st.j_m,
                    })
                }
            };
            Ok(json!({ "N": n.members(), "theta4": theta4, "structure": structure, "normal_subring": normal, "stability": stability }))
        }
        Command::Symext { group, n, budget } => {
            let g = Arc::new(load_monoid(group)?);
            let ext = symmetric_extension(&g, *n, *budget)?;
            let mut v = ext.to_json(json!(group));
            v["size"] = json!(ext.size());
            v["labels"] = json!(ext.elements.iter().map(|e| e.display()).collect::<Vec<_>>());
            v["embedding"] = json!(ext.embedding);
            v["idempotents"] = json!(ext.monoid.idempotents());
            v["semisimple"] = json!(is_semisimple(&ext.monoid).semisimple);
            Ok(v)
        }
        Command::Theta1 { group, rep, n, chi, budget, certificate_only } => {
            let g = Arc::new(load_monoid(group)?);
            let pi = pick_rep(&g, rep)?;
            let sign = match chi.as_str() {
                "trivial" => false,
                "sign" => true,
                other => return Err(CliError::parse(format!("--chi must be trivial or sign, not {other:?}"))),
            };
            let chi = sn_character(*n, sign);
            if *certificate_only {
                return Ok(json!({ "certificate": commutant_certificate(&pi, &chi, *n)? }));
            }
            let r = theorem_theta1_check(&g, &pi, &chi, *n, *budget, &provider())?;
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["theta"] = r.theta.to_json();
            Ok(v)
        }
        Command::Bruhat { perm, n } => {
            let w = parse_cycles(perm, *n)?;
            Ok(json!({ "one_line": w, "length": bruhat_length(&w) }))
        }
    }
}

/// The envelope shared by all commands.
pub fn report(cmd: &Command, result: Value, wall_ms: Option<u128>) -> Value {
    let mut v = json!({ "command": cmd.name(), "version": env!("CARGO_PKG_VERSION"), "result": result });
    if let Some(ms) = wall_ms {
        v["wall_time_ms"] = json!(ms);
    }
    v
}

/// Indented key: value rendering of a JSON report.
pub fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("-".into()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
                Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
            }
            _ => None,
        }
    }
    fn walk(v: &Value, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(x, depth + 1, out);
                        }
                    }
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}[{i}]\n"));
                            walk(x, depth + 1, out);
                        }
                    }
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

pub fn configure_threads() {
    if let Ok(s) = std::env::var("MONOIDREP_THREADS") {
        if let Ok(k) = s.trim().parse::<usize>() {
            if k > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}
