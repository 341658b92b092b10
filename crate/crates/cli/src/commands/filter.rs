use std::path::{Path, PathBuf};

use anyhow::Context;
use brokeneyes::{apply_condition, derive_seed, RgbImage};
use rayon::prelude::*;

use crate::config::ToolConfig;
use crate::FilterArgs;

/// Image files directly inside `dir`, sorted by path.
fn list_inputs(input: &Path) -> anyhow::Result<Vec<PathBuf>> {
    if input.is_file() {
        return Ok(vec![input.to_path_buf()]);
    }
    if !input.is_dir() {
        anyhow::bail!("input {} does not exist", input.display());
    }
    let mut files = Vec::new();
    for entry in std::fs::read_dir(input).with_context(|| format!("listing {}", input.display()))? {
        let path = entry?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn filter_one(path: &Path, args: &FilterArgs, config: &ToolConfig, seed: u64) -> anyhow::Result<PathBuf> {
    let image = RgbImage::open(path)?;
    let name = path.file_name().context("input has no file name")?;
    let image_seed = derive_seed(seed, name.as_encoded_bytes());
    let filtered = apply_condition(&image, args.condition, &config.filters, image_seed)?;
    let stem = path.file_stem().context("input has no file stem")?;
    let out = args.out.join(stem).with_extension("png");
    filtered.save_png(&out)?;
    Ok(out)
}

/// Seeds are derived from each file's name, so a file gets the same
/// degradation whether it is filtered alone or as part of a directory.
pub fn run(args: &FilterArgs, config: &ToolConfig) -> anyhow::Result<bool> {
    let seed = config.effective_seed(args.seed);
    let inputs = list_inputs(&args.input)?;
    std::fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;

    let results: Vec<_> = inputs
        .par_iter()
        .map(|path| filter_one(path, args, config, seed))
        .collect();

    let mut ok = true;
    for (path, result) in inputs.iter().zip(results) {
        match result {
            Ok(out) => println!("{} -> {}", path.display(), out.display()),
            Err(e) => {
                eprintln!("error: {}: {e:#}", path.display());
                ok = false;
            }
        }
    }
    eprintln!("filtered {} file(s) with {}", inputs.len(), args.condition);
    Ok(ok)
}
