use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::error::{parse, Result};
use crate::io_util::atomic_write;

#[derive(Serialize)]
struct InputRecord {
    path: String,
    sha256: String,
}

/// What a command run recorded: inputs with content hashes, produced
/// files, and the effective settings. Deliberately carries no timestamps
/// or machine identifiers, so reruns with identical inputs produce
/// byte-identical manifests.
#[derive(Serialize)]
struct Manifest {
    command: String,
    version: String,
    seed: u64,
    config_sha256: String,
    inputs: Vec<InputRecord>,
    outputs: Vec<String>,
    settings: std::collections::BTreeMap<String, String>,
}

pub struct ManifestBuilder {
    command: &'static str,
    inputs: Vec<PathBuf>,
    outputs: Vec<String>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for byte in digest {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

impl ManifestBuilder {
    pub fn new(command: &'static str) -> Self {
        ManifestBuilder { command, inputs: Vec::new(), outputs: Vec::new() }
    }

    pub fn input(&mut self, path: &Path) {
        self.inputs.push(path.to_path_buf());
    }

    /// Records an output by its file name inside the output directory.
    pub fn output(&mut self, name: &str) {
        self.outputs.push(String::from(name));
    }

    /// Writes `<command>.manifest.json` into `out_dir`.
    pub fn write(self, out_dir: &Path, config: &Config) -> Result<()> {
        let mut inputs = Vec::with_capacity(self.inputs.len());
        for path in &self.inputs {
            let bytes = std::fs::read(path).map_err(|e| parse(path, e))?;
            inputs.push(InputRecord {
                path: path.display().to_string(),
                sha256: sha256_hex(&bytes),
            });
        }
        let settings = config.effective();
        let mut rendering = String::new();
        for (key, value) in &settings {
            rendering.push_str(key);
            rendering.push('=');
            rendering.push_str(value);
            rendering.push('\n');
        }
        let manifest = Manifest {
            command: String::from(self.command),
            version: String::from(env!("CARGO_PKG_VERSION")),
            seed: config.rng_seed()?,
            config_sha256: sha256_hex(rendering.as_bytes()),
            inputs,
            outputs: self.outputs,
            settings,
        };
        let json = serde_json::to_string_pretty(&manifest)
            .expect("manifest serialization cannot fail");
        let path = out_dir.join(format!("{}.manifest.json", self.command));
        atomic_write(&path, &format!("{json}\n"))
    }
}
