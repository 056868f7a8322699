//! Comma-separated lists with inclusive ranges, as in `1,17-19`.

pub fn parse_list(spec: &str) -> Result<Vec<i64>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(format!("empty entry in list {spec:?}"));
        }
        // A leading '-' is a sign, not a range separator.
        let split = part[1..].find('-').map(|i| i + 1);
        match split {
            Some(i) => {
                let lo = number(&part[..i])?;
                let hi = number(&part[i + 1..])?;
                if lo > hi {
                    return Err(format!("range {part} is empty"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(number(part)?),
        }
    }
    out.dedup();
    Ok(out)
}

fn number(s: &str) -> Result<i64, String> {
    s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))
}

#[cfg(test)]
mod tests {
    use super::parse_list;

    #[test]
    fn ranges_and_singletons() {
        assert_eq!(parse_list("1,17-19").unwrap(), vec![1, 17, 18, 19]);
        assert_eq!(parse_list("-1,2").unwrap(), vec![-1, 2]);
        assert_eq!(parse_list("-2--1").unwrap(), vec![-2, -1]);
        assert!(parse_list("3-1").is_err());
        assert!(parse_list("1,,2").is_err());
        assert!(parse_list("x").is_err());
    }
}
