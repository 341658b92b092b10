use std::path::Path;

use brokeneyes::corpus::*;
use brokeneyes::fixtures::synthetic_scene;
use brokeneyes::{Condition, Error, FilterParams};

fn write_scenes(dir: &Path, n: usize, size: u32, seed_base: u64) {
    std::fs::create_dir_all(dir).unwrap();
    for i in 0..n {
        synthetic_scene(size, size, seed_base + i as u64)
            .save_png(dir.join(format!("img_{i:04}.png")))
            .unwrap();
    }
}

#[test]
fn scan_reports_corrupt_files() {
    let dir = tempfile::tempdir().unwrap();
    write_scenes(dir.path(), 3, 16, 0);
    std::fs::write(dir.path().join("broken.png"), b"not a png").unwrap();
    let report = scan_directory(dir.path(), ClassLabel::Human).unwrap();
    assert_eq!(report.records.len(), 3);
    assert_eq!(report.warnings.len(), 1);
    assert!(report.warnings[0].0.ends_with("broken.png"));
    assert!(report.records.windows(2).all(|w| w[0].path < w[1].path));
    assert!(report.records.iter().all(|r| r.split == Split::Unassigned && r.width == 16));

    let again = scan_directory(dir.path(), ClassLabel::Human).unwrap();
    assert_eq!(again.records, report.records);
}

#[test]
fn scan_empty_and_missing() {
    let dir = tempfile::tempdir().unwrap();
    assert!(scan_directory(dir.path(), ClassLabel::NonHuman).unwrap().records.is_empty());
    assert!(matches!(scan_directory(&dir.path().join("nope"), ClassLabel::Human), Err(Error::NotFound(_))));
}

#[test]
fn scan_recurses_and_hashes() {
    let dir = tempfile::tempdir().unwrap();
    write_scenes(&dir.path().join("Alice"), 2, 20, 10);
    write_scenes(&dir.path().join("Bob"), 2, 20, 10);
    let report = scan_directory(dir.path(), ClassLabel::Human).unwrap();
    assert_eq!(report.records.len(), 4);
    let bytes = std::fs::read(&report.records[0].path).unwrap();
    assert_eq!(report.records[0].sha256, sha256_hex(&bytes));
    // Bob's files are byte copies of Alice's
    let deduped = dedup_by_hash(report.records.clone());
    assert_eq!(deduped.len(), 2);
    assert!(deduped.iter().all(|r| r.path.starts_with(dir.path().join("Alice"))));

    let mut reversed = report.records.clone();
    reversed.reverse();
    let mut a: Vec<_> = dedup_by_hash(reversed).into_iter().map(|r| r.path).collect();
    let mut b: Vec<_> = deduped.into_iter().map(|r| r.path).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

fn curate(human: &Path, non_human: &Path, out: &Path, config: &CurationConfig) -> Manifest {
    let h = dedup_by_hash(filter_min_resolution(scan_directory(human, ClassLabel::Human).unwrap().records, config.min_resolution));
    let n = dedup_by_hash(filter_min_resolution(scan_directory(non_human, ClassLabel::NonHuman).unwrap().records, config.min_resolution));
    let (h, n) = balance_classes(h, n, config.balance_tolerance, config.global_seed).unwrap();
    let mut all = h;
    all.extend(n);
    let split = stratified_split(all, &config.split_ratios, config.global_seed).unwrap();
    let (h, n): (Vec<_>, Vec<_>) = split.into_iter().partition(|r| r.class_label == ClassLabel::Human);
    generate_dataset(&h, &n, &FilterParams::default(), config, config.global_seed, out).unwrap()
}

#[test]
fn pipeline_is_deterministic_and_row_constant() {
    let src = tempfile::tempdir().unwrap();
    write_scenes(&src.path().join("h"), 14, 24, 100);
    write_scenes(&src.path().join("n"), 13, 24, 200);
    // one low-resolution image that must be filtered out
    synthetic_scene(8, 30, 1).save_png(src.path().join("h").join("tiny.png")).unwrap();
    let config = CurationConfig { min_resolution: 16, target_size: 32, global_seed: 11, ..Default::default() };

    let out_a = tempfile::tempdir().unwrap();
    let out_b = tempfile::tempdir().unwrap();
    let a = curate(&src.path().join("h"), &src.path().join("n"), out_a.path(), &config);
    let b = curate(&src.path().join("h"), &src.path().join("n"), out_b.path(), &config);

    for c in Condition::ALL {
        assert_eq!(a.count(c, ClassLabel::Human), 14);
        assert_eq!(a.count(c, ClassLabel::NonHuman), 13);
    }
    assert_eq!(a.records.len(), 6 * 27);
    for (ra, rb) in a.records.iter().zip(&b.records) {
        assert_eq!(ra.sha256, rb.sha256);
        assert_eq!(ra.split, rb.split);
        assert_eq!(ra.path.strip_prefix(out_a.path()).unwrap(), rb.path.strip_prefix(out_b.path()).unwrap());
        assert_eq!(std::fs::read(&ra.path).unwrap(), std::fs::read(&rb.path).unwrap());
    }

    // membership of each split is identical across conditions
    let splits = |c: Condition| -> Vec<_> {
        a.records
            .iter()
            .filter(|r| r.condition == c)
            .map(|r| (r.path.file_name().unwrap().to_owned(), r.class_label, r.split))
            .collect()
    };
    for c in Condition::DISORDERS {
        assert_eq!(splits(c), splits(Condition::Normal));
    }

    let path = out_a.path().join("manifest.jsonl");
    write_manifest(&a, &path).unwrap();
    assert_eq!(read_manifest(&path).unwrap().records, a.records);
}

#[test]
fn generation_is_thread_count_independent() {
    let src = tempfile::tempdir().unwrap();
    write_scenes(src.path(), 8, 40, 300);
    let records = scan_directory(src.path(), ClassLabel::Human).unwrap().records;
    let records = stratified_split(records, &SplitRatios::default(), 3).unwrap();
    let config = CurationConfig { target_size: 40, ..Default::default() };
    let run = |threads: usize| {
        let out = tempfile::tempdir().unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let m = pool.install(|| generate_dataset(&records, &[], &FilterParams::default(), &config, 99, out.path()).unwrap());
        m.records.iter().map(|r| r.sha256.clone()).collect::<Vec<_>>()
    };
    assert_eq!(run(1), run(8));
}
