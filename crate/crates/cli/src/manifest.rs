use std::fmt::Display;
use std::io::{self, Write};
use std::path::Path;

/// Everything needed to rerun a command: subcommand, input, every flag with
/// its resolved value, and the tool version.
#[derive(Debug, Clone)]
pub struct RunManifest {
    pub subcommand: &'static str,
    pub input: String,
    pub flags: Vec<(String, String)>,
    pub version: &'static str,
}

impl RunManifest {
    pub fn new(subcommand: &'static str, input: &Path) -> Self {
        RunManifest {
            subcommand,
            input: input.display().to_string(),
            flags: Vec::new(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn flag(&mut self, key: &str, value: impl Display) {
        self.flags.push((key.to_owned(), value.to_string()));
    }

    /// One `# key=value` line per entry.
    pub fn write_comments<W: Write + ?Sized>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "# tool=lse version={}", self.version)?;
        writeln!(out, "# subcommand={}", self.subcommand)?;
        writeln!(out, "# input={}", self.input)?;
        for (k, v) in &self.flags {
            writeln!(out, "# {k}={v}")?;
        }
        Ok(())
    }
}
