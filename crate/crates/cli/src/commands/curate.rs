use anyhow::Context;
use brokeneyes::corpus::{
    balance_classes, dedup_by_hash, filter_min_resolution, generate_dataset, scan_directory, stratified_split, write_manifest,
    ClassLabel, Manifest, Split,
};
use brokeneyes::Condition;
use serde_json::json;

use crate::config::ToolConfig;
use crate::CurateArgs;

fn print_summary(manifest: &Manifest) {
    println!("{:<18} {:>9} {:>9}", "condition", "human", "non_human");
    let (mut human, mut non_human) = (0, 0);
    for c in Condition::ALL {
        let (h, n) = (manifest.count(c, ClassLabel::Human), manifest.count(c, ClassLabel::NonHuman));
        human += h;
        non_human += n;
        println!("{:<18} {:>9} {:>9}", c.label(), h, n);
    }
    println!("{:<18} {:>9} {:>9}", "Total", human, non_human);
}

pub fn run(args: &CurateArgs, config: &ToolConfig) -> anyhow::Result<bool> {
    let mut curation = config.curation;
    curation.global_seed = config.effective_seed(args.seed);
    curation.validate()?;

    let mut sources = Vec::new();
    for (class, dir) in [(ClassLabel::Human, &args.human), (ClassLabel::NonHuman, &args.nonhuman)] {
        let report = scan_directory(dir, class)?;
        for (path, why) in &report.warnings {
            eprintln!("warning: skipping {}: {why}", path.display());
        }
        let scanned = report.records.len();
        let kept = filter_min_resolution(report.records, curation.min_resolution);
        let resolution_ok = kept.len();
        let kept = dedup_by_hash(kept);
        eprintln!(
            "{class}: {scanned} decoded, {resolution_ok} at >= {} px, {} after dedup",
            curation.min_resolution,
            kept.len()
        );
        sources.push(kept);
    }
    let non_human = sources.pop().expect("two classes");
    let human = sources.pop().expect("two classes");

    let (human, non_human) = balance_classes(human, non_human, curation.balance_tolerance, curation.global_seed)?;
    eprintln!("balanced: {} human, {} non_human", human.len(), non_human.len());

    let mut all = human;
    all.extend(non_human);
    let split = stratified_split(all, &curation.split_ratios, curation.global_seed)?;
    let (human, non_human): (Vec<_>, Vec<_>) = split.into_iter().partition(|r| r.class_label == ClassLabel::Human);
    for s in [Split::Train, Split::Val, Split::Test] {
        let n = human.iter().chain(&non_human).filter(|r| r.split == s).count();
        eprintln!("{s:?}: {n}");
    }

    std::fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let manifest = generate_dataset(&human, &non_human, &config.filters, &curation, curation.global_seed, &args.out)?;
    // paths relative to the output directory keep the tree relocatable
    let manifest = manifest.relative_to(&args.out);
    write_manifest(&manifest, &args.out.join("manifest.jsonl"))?;

    let digest = manifest.config_digest.clone().unwrap_or_default();
    let effective = json!({
        "config_digest": digest,
        "curation": curation,
        "filters": config.filters,
    });
    let path = args.out.join("curation.json");
    std::fs::write(&path, serde_json::to_string_pretty(&effective)? + "\n").with_context(|| format!("writing {}", path.display()))?;
    eprintln!("config digest {digest}, run started {}", manifest.created_at.to_rfc3339());

    print_summary(&manifest);
    Ok(true)
}
