/**
 * Number formatting.
 *
 * `reprFloat` reproduces CPython's float repr byte-for-byte so that CSV
 * downloads assembled client-side from /figure rows equal the CLI's files:
 * shortest round-trip digits, fixed notation for decimal exponents in
 * [-4, 16), scientific otherwise with a signed two-digit-minimum exponent,
 * and a trailing ".0" on integral fixed-form values.
 */

export function reprFloat(value: number): string {
  if (Number.isNaN(value)) return "nan";
  if (value === Infinity) return "inf";
  if (value === -Infinity) return "-inf";
  if (value === 0) return Object.is(value, -0) ? "-0.0" : "0.0";

  const sign = value < 0 ? "-" : "";
  // toExponential() without an argument yields the shortest digit string
  // that uniquely identifies the double, same as Python's repr digits
  const [mantissa, expPart] = Math.abs(value).toExponential().split("e") as [string, string];
  const digits = mantissa.replace(".", "");
  const exp10 = parseInt(expPart, 10);

  if (exp10 >= 16 || exp10 < -4) {
    const head = digits[0];
    const tail = digits.slice(1);
    const expSign = exp10 < 0 ? "-" : "+";
    const expDigits = String(Math.abs(exp10)).padStart(2, "0");
    return `${sign}${head}${tail ? "." + tail : ""}e${expSign}${expDigits}`;
  }
  if (exp10 >= digits.length - 1) {
    return `${sign}${digits}${"0".repeat(exp10 - digits.length + 1)}.0`;
  }
  if (exp10 >= 0) {
    return `${sign}${digits.slice(0, exp10 + 1)}.${digits.slice(exp10 + 1)}`;
  }
  return `${sign}0.${"0".repeat(-exp10 - 1)}${digits}`;
}

/** Compact human formatting for panel readouts (not used in CSV). */
export function display(value: number, digits = 4): string {
  if (!Number.isFinite(value)) return String(value);
  const magnitude = Math.abs(value);
  if (magnitude !== 0 && (magnitude >= 1e6 || magnitude < 1e-3)) {
    return value.toExponential(Math.max(digits - 1, 0));
  }
  return value.toPrecision(digits).replace(/\.0+$|(\.\d*?)0+$/, "$1");
}
