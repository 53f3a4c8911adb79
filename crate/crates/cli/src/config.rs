//! `key = value` config files, spliced into the argument list ahead of
//! the command-line flags so that later flags win.

use std::fs;

use crate::args::SWITCHES;
use crate::UsageError;

/// Parsed `key = value` lines. Blank lines and `#` comments are skipped.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, UsageError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| UsageError(format!("config line {}: expected `key = value`", i + 1)))?;
        let k = k.trim();
        if k.is_empty() {
            return Err(UsageError(format!("config line {}: empty key", i + 1)));
        }
        out.push((k.to_string(), v.trim().to_string()));
    }
    Ok(out)
}

/// Removes `--config <path>` from `argv` and inserts the file's settings
/// right after the subcommand. A `command` key supplies the subcommand
/// when none is given.
pub fn expand(argv: &[String]) -> Result<Vec<String>, UsageError> {
    let mut rest = Vec::with_capacity(argv.len());
    let mut path = None;
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--config" {
            let p = it.next().ok_or_else(|| UsageError("--config needs a path".into()))?;
            path = Some(p.clone());
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a.clone());
        }
    }
    let mut out = vec![argv.first().cloned().unwrap_or_else(|| "dampwave".into())];
    let Some(path) = path else {
        out.extend(rest);
        return Ok(out);
    };
    let text = fs::read_to_string(&path).map_err(|e| UsageError(format!("--config {path}: {e}")))?;
    let entries = parse_config(&text)?;
    let mut command = None;
    let mut flags = Vec::new();
    for (k, v) in entries {
        if k == "command" {
            command = Some(v);
        } else if SWITCHES.contains(&k.as_str()) {
            match v.as_str() {
                "true" => flags.push(format!("--{k}")),
                "false" => {}
                _ => return Err(UsageError(format!("config key {k} must be true or false"))),
            }
        } else {
            flags.push(format!("--{k}"));
            flags.push(v);
        }
    }
    // only --config may precede the subcommand
    let sub_pos = rest.first().filter(|a| !a.starts_with('-')).map(|_| 0);
    match sub_pos {
        Some(i) => {
            if let Some(c) = &command {
                if c != &rest[i] {
                    return Err(UsageError(format!(
                        "config is for `{c}` but the command line asks for `{}`",
                        rest[i]
                    )));
                }
            }
            out.extend(rest[..=i].iter().cloned());
            out.extend(flags);
            out.extend(rest[i + 1..].iter().cloned());
        }
        None => {
            let c = command.ok_or_else(|| UsageError("no subcommand given and config has no `command` key".into()))?;
            out.push(c);
            out.extend(flags);
            out.extend(rest);
        }
    }
    Ok(out)
}
