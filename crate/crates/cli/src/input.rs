use std::collections::BTreeMap;
use std::io::Read;

use sha2::{Digest, Sha256};

use crate::report::CliError;

/// Reads documents and remembers a digest of each.
#[derive(Debug, Default)]
pub struct Inputs {
    stdin_taken: bool,
    digests: BTreeMap<&'static str, String>,
}

impl Inputs {
    /// Inline JSON if the argument starts with `{` or `[`, standard input
    /// for `-`, otherwise a file path.
    pub fn load(&mut self, name: &'static str, arg: &str) -> Result<String, CliError> {
        let trimmed = arg.trim_start();
        let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
            arg.to_owned()
        } else if arg == "-" {
            if self.stdin_taken {
                return Err(CliError::Usage(
                    "standard input can supply only one document".into(),
                ));
            }
            self.stdin_taken = true;
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(arg).map_err(|e| CliError::Io(format!("reading {arg}: {e}")))?
        };
        self.digests
            .insert(name, hex::encode(Sha256::digest(text.as_bytes())));
        Ok(text)
    }

    pub fn digests(&self) -> &BTreeMap<&'static str, String> {
        &self.digests
    }
}
