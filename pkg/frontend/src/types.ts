/** Shapes of the meeting report document the review page is built from.
 *
 * These mirror the JSON emitted by the talkmeter CLI and service. The viewer
 * treats the document as read-only reference data: every number shown on the
 * page comes straight from a field below, never from a recomputation.
 */

export type SegmentLabel = "WHOLE" | "FIRST_HALF" | "SECOND_HALF";

export const SEGMENT_LABELS: readonly SegmentLabel[] = [
  "WHOLE",
  "FIRST_HALF",
  "SECOND_HALF",
];

export interface MeetingBlock {
  meeting_id: string;
  group_id: string;
  week_index: number;
  participants: string[];
  first_half_language: string;
  second_half_language: string;
  recorded_duration_s: number | null;
  changeover_s: number | null;
  media_url: string | null;
}

export interface ConfigBlock {
  duration_mode: string;
  series_unit: string;
  rate_scale_mode: string;
  min_points: number;
  gap_break_s: number | null;
  exclude_unknown_speaker: boolean;
}

export interface DiagnosticsBlock {
  dropped_cue_count: number;
  source_byte_count: number;
  warning_count: number;
  warnings: string[];
}

export interface UtteranceDoc {
  index: number;
  speaker: string;
  start_s: number;
  end_s: number;
  text: string;
}

export interface TurnDoc {
  speaker: string;
  start_s: number;
  end_s: number;
  duration_s: number;
  summed_duration_s: number;
  utterance_indices: number[];
}

export interface ParticipationRow {
  speaker: string;
  speaking_time_s: number;
  participation_pct: number;
  turn_count: number;
}

export interface TransitionMatrix {
  speakers: string[];
  counts: number[][];
}

export interface VolatilityDoc {
  n_points: number;
  raw_sigma: number | null;
  rate_scale: number | null;
  volatility: number | null;
  defined: boolean;
}

export interface ParticipantVolatility extends VolatilityDoc {
  speaker: string;
}

export interface SegmentDoc {
  label: SegmentLabel;
  language: string;
  span_start_s: number;
  span_end_s: number;
  turn_count: number;
  turns: TurnDoc[];
  participation: ParticipationRow[];
  transitions: TransitionMatrix;
  volatility: VolatilityDoc;
  per_participant_volatility: ParticipantVolatility[];
}

export interface MeetingReport {
  schema_version: number;
  tool_version: string;
  formula: string;
  meeting: MeetingBlock;
  config: ConfigBlock;
  split_s: number;
  speakers: string[];
  diagnostics: DiagnosticsBlock;
  utterances: UtteranceDoc[];
  segments: Record<SegmentLabel, SegmentDoc>;
  media_url: string | null;
}

function deepFreeze<T>(value: T): T {
  if (value !== null && typeof value === "object" && !Object.isFrozen(value)) {
    Object.freeze(value);
    for (const key of Object.getOwnPropertyNames(value)) {
      deepFreeze((value as Record<string, unknown>)[key]);
    }
  }
  return value;
}

/** Parse the embedded report JSON and freeze it.
 *
 * Only the fields the page relies on are checked; the goal is a clear error
 * for a malformed embed, not full schema validation. The returned object is
 * deeply frozen so accidental mutation fails loudly in tests.
 */
export function parseReport(json: string): MeetingReport {
  let raw: unknown;
  try {
    raw = JSON.parse(json);
  } catch (err) {
    throw new Error(`report data is not valid JSON: ${String(err)}`);
  }
  if (raw === null || typeof raw !== "object" || Array.isArray(raw)) {
    throw new Error("report data is not a JSON object");
  }
  const doc = raw as Record<string, unknown>;
  for (const key of ["meeting", "segments", "speakers", "utterances"]) {
    if (!(key in doc)) {
      throw new Error(`report data is missing the "${key}" field`);
    }
  }
  const segments = doc.segments as Record<string, unknown>;
  for (const label of SEGMENT_LABELS) {
    if (!(label in segments)) {
      throw new Error(`report data is missing the ${label} segment`);
    }
  }
  if (!Array.isArray(doc.speakers)) {
    throw new Error('report field "speakers" is not a list');
  }
  return deepFreeze(raw as MeetingReport);
}
