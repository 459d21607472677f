use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use rayon::prelude::*;
use symprep::autgrp::{formula_automorphisms, SearchLimits};
use symprep::cnf::{parse_dimacs, write_dimacs};
use symprep::gen::{gen_php, gen_random};
use symprep::graph::{build_model_graph, color_refinement, export_graph, prune_discrete};
use symprep::symmetry::{
    compute_metrics, is_semantic_symmetry, is_syntactic_symmetry, parse_generators, write_generators,
};
use symprep::transforms::{preprocess_pipeline, BveBound, PipelineConfig};
use symprep::{Error, Formula, PermGroup, PhpSpec};

use crate::{Command, DetectArgs, Family, GenArgs, GraphArgs, MetricsArgs, PreprocessArgs, VerifyArgs};

pub const EXIT_SAT: u8 = 10;
pub const EXIT_UNSAT: u8 = 20;
const EXIT_INCOMPLETE: u8 = 3;

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Preprocess(a) => preprocess(a),
        Command::Graph(a) => graph(a),
        Command::Detect(a) => detect(a),
        Command::Metrics(a) => metrics(a),
        Command::Verify(a) => verify(a),
        Command::Gen(a) => gen(a),
    }
}

fn read_formula(path: &Path) -> Result<Formula> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    parse_dimacs(&bytes).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn limits(budget: Option<u64>) -> SearchLimits {
    SearchLimits {
        max_nodes: budget,
        max_time: None,
    }
}

fn preprocess_one(input: &Path, out: Option<&Path>, trace: Option<&Path>, cfg: &PipelineConfig) -> Result<u8> {
    let f = read_formula(input)?;
    let r = preprocess_pipeline(&f, cfg);
    emit(out, &write_dimacs(&r.output))?;
    if let Some(t) = trace {
        fs::write(t, r.trace.to_text()).with_context(|| format!("writing {}", t.display()))?;
    }
    eprintln!(
        "c {}: {} -> {} clauses, {} steps",
        input.display(),
        f.len(),
        r.output.len(),
        r.trace.len()
    );
    Ok(if r.output.is_conflict() {
        EXIT_UNSAT
    } else if r.output.is_empty() {
        EXIT_SAT
    } else {
        0
    })
}

fn preprocess(a: PreprocessArgs) -> Result<u8> {
    let cfg = PipelineConfig {
        max_passes: a.passes as usize,
        bound: BveBound { slack: a.bound },
    };
    if let [input] = a.inputs.as_slice() {
        return preprocess_one(input, a.out.as_deref(), a.trace.as_deref(), &cfg);
    }
    // several inputs: one output per file inside the --out directory
    let Some(out_dir) = a.out.as_deref() else {
        bail!("--out <dir> is required with several inputs");
    };
    for dir in [Some(out_dir), a.trace.as_deref()].into_iter().flatten() {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let target = |dir: &Path, input: &Path, ext: &str| -> Result<PathBuf> {
        let name = input
            .file_name()
            .with_context(|| format!("no file name in {}", input.display()))?;
        Ok(dir.join(name).with_extension(ext))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs as usize)
        .build()
        .context("starting worker threads")?;
    let results: Vec<Result<u8>> = pool.install(|| {
        a.inputs
            .par_iter()
            .map(|input| {
                let out = target(out_dir, input, "cnf")?;
                let trace = a.trace.as_deref().map(|t| target(t, input, "trace")).transpose()?;
                preprocess_one(input, Some(&out), trace.as_deref(), &cfg)
            })
            .collect()
    });
    let mut failed = 0;
    for (input, r) in a.inputs.iter().zip(results) {
        if let Err(e) = r {
            eprintln!("error: {}: {e:#}", input.display());
            failed += 1;
        }
    }
    ensure!(failed == 0, "{failed} of {} inputs failed", a.inputs.len());
    Ok(0)
}

fn graph(a: GraphArgs) -> Result<u8> {
    let f = read_formula(&a.input)?;
    let mut g = build_model_graph(&f);
    if a.prune {
        let p = color_refinement(&g);
        g = prune_discrete(&g, &p);
    }
    emit(a.out.as_deref(), &export_graph(&g))?;
    Ok(0)
}

fn detect(a: DetectArgs) -> Result<u8> {
    let f = read_formula(&a.input)?;
    match formula_automorphisms(&f, &limits(a.budget)) {
        Ok(g) => {
            let order = g.order();
            let text = format!("c order {order}\n{}", write_generators(g.generators()));
            emit(a.out.as_deref(), &text)?;
            if a.out.is_some() {
                println!("{order}");
            }
            Ok(0)
        }
        Err(Error::BudgetExhausted { nodes, partial }) => {
            let text = format!(
                "c INCOMPLETE search budget exhausted after {nodes} nodes\n{}",
                write_generators(&partial)
            );
            emit(a.out.as_deref(), &text)?;
            eprintln!("warning: search budget exhausted after {nodes} nodes; generators are partial");
            Ok(EXIT_INCOMPLETE)
        }
        Err(e) => Err(e.into()),
    }
}

fn group(f: &Formula, budget: Option<u64>, what: &str) -> Result<PermGroup> {
    formula_automorphisms(f, &limits(budget)).with_context(|| format!("detecting symmetry of {what}"))
}

fn metrics(a: MetricsArgs) -> Result<u8> {
    let f = read_formula(&a.original)?;
    let fstar = read_formula(&a.preprocessed)?;
    let m = compute_metrics(
        &f,
        &fstar,
        &group(&f, a.budget, "the original")?,
        &group(&fstar, a.budget, "the preprocessed formula")?,
    )?;
    emit(a.out.as_deref(), &format!("{}\n", m.to_json()))?;
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8> {
    let f = read_formula(&a.input)?;
    let text = fs::read_to_string(&a.generators).with_context(|| format!("reading {}", a.generators.display()))?;
    let gens = parse_generators(&text, f.num_vars()).with_context(|| format!("parsing {}", a.generators.display()))?;
    let mut failed = 0;
    for p in &gens {
        let ok = match a.semantic {
            Some(max) => is_semantic_symmetry(&f, p, max as usize)?,
            None => is_syntactic_symmetry(&f, p)?,
        };
        println!("{} {p}", if ok { "PASS" } else { "FAIL" });
        failed += usize::from(!ok);
    }
    eprintln!("c {} generators, {failed} failed", gens.len());
    Ok(u8::from(failed > 0))
}

fn gen(a: GenArgs) -> Result<u8> {
    let f = match a.family {
        Family::Php { pigeons, holes } => gen_php(PhpSpec::new(pigeons, holes)),
        Family::Random {
            vars,
            clauses,
            width,
            seed,
        } => {
            ensure!(
                (1..=vars as usize).contains(&width),
                "width must be between 1 and the variable count"
            );
            gen_random(vars, clauses, width, seed)
        }
    };
    emit(a.out.as_deref(), &write_dimacs(&f))?;
    Ok(0)
}
