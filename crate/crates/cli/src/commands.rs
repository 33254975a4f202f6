//! The three subcommands: cluster, bench-kstar, scaling.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use nnhier::{
    build_hierarchy, coarsest_partition, find_kstar, natural_partition, Dataset, Hierarchy,
    Partition,
};

use crate::args::{BenchKstarArgs, ClusterArgs, DistArg, FormatArg, PartitionArg, ScalingArgs};
use crate::datagen;
use crate::error::CliError;
use crate::export;
use crate::input;

/// Where the human-readable summary goes: stdout when the artifact is
/// written to a file, stderr when the artifact occupies stdout.
struct Summary {
    to_stdout: bool,
    lines: Vec<String>,
}

impl Summary {
    fn new(to_stdout: bool) -> Summary {
        Summary {
            to_stdout,
            lines: Vec::new(),
        }
    }

    fn push(&mut self, line: String) {
        self.lines.push(line);
    }

    fn print(&self) {
        for line in &self.lines {
            if self.to_stdout {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }
        }
    }
}

fn write_artifact(output: Option<&Path>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::io(format!("cannot write {}", path.display()), e)),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(content.as_bytes())
                .and_then(|()| handle.flush())
                .map_err(|e| CliError::io("cannot write to standard output".to_string(), e))
        }
    }
}

fn seconds(d: Duration) -> f64 {
    d.as_secs_f64()
}

pub fn cmd_cluster(args: &ClusterArgs) -> Result<(), CliError> {
    if args.format == FormatArg::LabelsCsv && args.partition == PartitionArg::None {
        return Err(CliError::Flags(
            "--format labels-csv needs --partition natural or coarsest".to_string(),
        ));
    }

    let started = Instant::now();
    let rows = input::read_points(&args.input)?;
    let dataset = Dataset::from_rows(&rows).map_err(|e| CliError::Data(e.to_string()))?;
    let read_time = started.elapsed();

    let phase = Instant::now();
    let hierarchy = build_hierarchy(
        &dataset,
        &args.metric.to_metric(),
        args.backend.to_backend(),
    )?;
    let hierarchy_time = phase.elapsed();

    let phase = Instant::now();
    let partition: Option<Partition> = match args.partition {
        PartitionArg::Natural => Some(natural_partition(&hierarchy)?),
        PartitionArg::Coarsest => Some(coarsest_partition(&hierarchy)?),
        PartitionArg::None => None,
    };
    let partition_time = phase.elapsed();

    let phase = Instant::now();
    let artifact = match args.format {
        FormatArg::Json => {
            let partition_doc = partition
                .as_ref()
                .map(|p| export::partition_doc(p, args.partition.name()));
            export::to_json(&export::hierarchy_doc(&hierarchy, partition_doc))
        }
        FormatArg::Newick => export::to_newick(&hierarchy.to_tree()),
        FormatArg::LabelsCsv => {
            let p = partition.as_ref().expect("checked above");
            export::to_labels_csv(p)
        }
    };
    write_artifact(args.output.as_deref(), &artifact)?;
    let write_time = phase.elapsed();

    let mut summary = Summary::new(args.output.is_some());
    summary.push(format!(
        "points: {}, dims: {}, metric: {}, backend: {}",
        dataset.len(),
        dataset.dim(),
        args.metric.name(),
        args.backend.name()
    ));
    summary.push(format!("k_star: {}", find_kstar(&hierarchy)));
    for &k in hierarchy.distinct_ks() {
        summary.push(format!(
            "  k={k}: {} clusters",
            hierarchy.level(k).cluster_count()
        ));
    }
    if let Some(p) = &partition {
        summary.push(format!(
            "partition ({}): {} clusters",
            args.partition.name(),
            p.clusters().len()
        ));
    }
    summary.push(format!(
        "timing: read {:.3}s, hierarchy {:.3}s, partition {:.3}s, write {:.3}s",
        seconds(read_time),
        seconds(hierarchy_time),
        seconds(partition_time),
        seconds(write_time)
    ));
    summary.print();
    Ok(())
}

fn kstar_of_sample(dist: DistArg, n: usize, seed: u64, trial: u64) -> Result<(usize, f64), CliError> {
    let points = datagen::sample(dist, n, &mut datagen::cell_rng(seed, n as u64, trial));
    let dataset = Dataset::from_rows(&points).map_err(|e| CliError::Data(e.to_string()))?;
    let started = Instant::now();
    let hierarchy = build_hierarchy(&dataset, &nnhier::Metric::Euclidean, nnhier::KnnBackend::KdTree)?;
    Ok((hierarchy.k_star(), seconds(started.elapsed())))
}

/// Runs the k*-growth benchmark and returns the CSV report.
pub fn bench_kstar_report(args: &BenchKstarArgs) -> Result<String, CliError> {
    if args.trials < 1 {
        return Err(CliError::Flags("--trials must be at least 1".to_string()));
    }
    if let Some(&bad) = args.n.iter().find(|&&n| n < 2) {
        return Err(CliError::Flags(format!(
            "--n values must be at least 2, got {bad}"
        )));
    }
    let mut csv = String::from("n,trial,k_star,k_star_over_ln_n,wall_time_s\n");
    for &n in &args.n {
        for trial in 0..args.trials {
            let (k_star, elapsed) = kstar_of_sample(args.dist, n, args.seed, trial as u64)?;
            let ratio = k_star as f64 / (n as f64).ln();
            csv.push_str(&format!(
                "{n},{trial},{k_star},{ratio:.6},{elapsed:.6}\n"
            ));
        }
    }
    Ok(csv)
}

pub fn cmd_bench_kstar(args: &BenchKstarArgs) -> Result<(), CliError> {
    let csv = bench_kstar_report(args)?;
    write_artifact(args.output.as_deref(), &csv)
}

/// Runs the wall-time scaling benchmark and returns the CSV report.
pub fn scaling_report(args: &ScalingArgs) -> Result<String, CliError> {
    if args.repeats < 1 {
        return Err(CliError::Flags("--repeats must be at least 1".to_string()));
    }
    if let Some(&bad) = args.n.iter().find(|&&n| n < 2) {
        return Err(CliError::Flags(format!(
            "--n values must be at least 2, got {bad}"
        )));
    }
    let backend = args.backend.to_backend();
    let mut csv = String::from("n,backend,seconds\n");
    for &n in &args.n {
        for repeat in 0..args.repeats {
            let points =
                datagen::uniform_square(n, &mut datagen::cell_rng(args.seed, n as u64, repeat as u64));
            let dataset = Dataset::from_rows(&points).map_err(|e| CliError::Data(e.to_string()))?;
            let started = Instant::now();
            let hierarchy: Hierarchy =
                std::hint::black_box(build_hierarchy(&dataset, &nnhier::Metric::Euclidean, backend)?);
            let elapsed = seconds(started.elapsed());
            drop(hierarchy);
            csv.push_str(&format!("{n},{},{elapsed:.6}\n", args.backend.name()));
        }
    }
    Ok(csv)
}

pub fn cmd_scaling(args: &ScalingArgs) -> Result<(), CliError> {
    let csv = scaling_report(args)?;
    write_artifact(args.output.as_deref(), &csv)
}
