/** Formatting helpers for values taken from the report document.
 *
 * Displayed numbers are the report fields rendered at a fixed precision.
 * Nothing in here derives new quantities from other fields.
 */

export function fmtVolatility(value: number | null): string {
  return value === null ? "n/a" : value.toFixed(3);
}

export function fmtPct(value: number): string {
  return value.toFixed(1) + "%";
}

export function fmtSecondsQty(value: number): string {
  return value.toFixed(1) + " s";
}

/** Format a position in seconds as a clock time, e.g. 65 -> "1:05". */
export function fmtClock(seconds: number): string {
  const total = Math.max(0, Math.floor(seconds));
  const h = Math.floor(total / 3600);
  const m = Math.floor((total % 3600) / 60);
  const s = total % 60;
  const mm = h > 0 && m < 10 ? `0${m}` : String(m);
  const ss = s < 10 ? `0${s}` : String(s);
  return h > 0 ? `${h}:${mm}:${ss}` : `${mm}:${ss}`;
}
