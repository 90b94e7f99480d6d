use std::io::Read;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::report::Failure;

/// Raw input text and where it came from.
pub struct Loaded {
    pub name: String,
    pub text: String,
}

impl Loaded {
    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.text.as_bytes()))
    }
}

/// Reads `arg`: `-` or nothing means stdin; an existing path is read as is;
/// otherwise the name is looked up in `$CORNERKIT_DATA` and then among the
/// shipped data files.
pub fn load(arg: Option<&str>) -> Result<Loaded, Failure> {
    let arg = arg.unwrap_or("-");
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure(format!("reading stdin: {e}")))?;
        return Ok(Loaded { name: "-".into(), text });
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("reading {arg}: {e}")))?;
        return Ok(Loaded { name: arg.into(), text });
    }
    if let Ok(dir) = std::env::var("CORNERKIT_DATA") {
        let candidate = Path::new(&dir).join(arg);
        if candidate.exists() {
            let text =
                std::fs::read_to_string(&candidate).map_err(|e| Failure(format!("reading {}: {e}", candidate.display())))?;
            return Ok(Loaded { name: arg.into(), text });
        }
    }
    match cornerkit::corpus::lookup(arg) {
        Some(text) => Ok(Loaded { name: arg.into(), text: text.into() }),
        None => Err(Failure(format!("no such input: {arg}"))),
    }
}

/// Loads several inputs, refusing to read stdin twice.
pub fn load_all(args: &[Option<&str>]) -> Result<Vec<Loaded>, Failure> {
    let stdin_uses = args.iter().filter(|s| s.unwrap_or("-") == "-").count();
    if stdin_uses > 1 {
        return Err(Failure("only one input can come from stdin".into()));
    }
    args.iter().map(|s| load(*s)).collect()
}
