use std::collections::BTreeMap;

use anyhow::Context;
use brokeneyes::metrics::{activation_energy, compare_tensors, diff_heatmap, load_disorder_tensors, read_tensor, write_report};
use brokeneyes::Condition;
use rayon::prelude::*;

use crate::AnalyzeArgs;

pub fn run(args: &AnalyzeArgs) -> anyhow::Result<bool> {
    let baseline = read_tensor(&args.baseline).with_context(|| format!("baseline {}", args.baseline.display()))?;
    let paths: BTreeMap<_, _> = Condition::DISORDERS
        .iter()
        .map(|&c| (c, args.disorders.join(format!("{}.tnsr", c.slug()))))
        .collect();
    let tensors = load_disorder_tensors(&paths)?;
    let records = compare_tensors(&baseline, &tensors)?;

    std::fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let report = args.out.join(format!("report.{}", args.format.extension()));
    write_report(&records, &report, args.format)?;

    Condition::DISORDERS.par_iter().try_for_each(|c| -> anyhow::Result<()> {
        let heatmap = diff_heatmap(&baseline, &tensors[c])?;
        heatmap.save_png(&args.out.join(format!("heatmap_{}.png", c.slug())))?;
        Ok(())
    })?;

    eprintln!("baseline energy {:.4}", activation_energy(&baseline));
    println!("{:<18} {:>18} {:>18}", "condition", "activation_energy", "cosine_similarity");
    for r in &records {
        println!("{:<18} {:>18.2} {:>18.4}", r.condition.label(), r.activation_energy, r.cosine_similarity);
    }
    eprintln!("wrote {}", report.display());
    Ok(true)
}
