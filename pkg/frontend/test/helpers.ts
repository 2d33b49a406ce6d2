import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { SeekableMedia } from "../src/media";
import {
  MeetingReport,
  ParticipationRow,
  SegmentDoc,
  SegmentLabel,
  TransitionMatrix,
  TurnDoc,
  UtteranceDoc,
  VolatilityDoc,
  parseReport,
} from "../src/types";

const here = dirname(fileURLToPath(import.meta.url));

export function fixtureText(name: string): string {
  return readFileSync(join(here, "fixtures", name), "utf-8");
}

/** Parsed, frozen report from a fixture file generated by the CLI. */
export function loadReport(name = "report.json"): MeetingReport {
  return parseReport(fixtureText(name));
}

/** The raw JSON object of a fixture, for comparing displayed values against
 * the document fields without going through the viewer's own parser. */
export function rawFixture(name = "report.json"): Record<string, unknown> {
  return JSON.parse(fixtureText(name)) as Record<string, unknown>;
}

export class FakeMedia implements SeekableMedia {
  currentTime = 0;
  paused = true;
  playCalls = 0;
  failPlay = false;
  private seekedListeners: (() => void)[] = [];

  play(): Promise<void> {
    this.playCalls += 1;
    if (this.failPlay) {
      return Promise.reject(new Error("autoplay blocked"));
    }
    this.paused = false;
    return Promise.resolve();
  }

  addEventListener(type: string, listener: () => void): void {
    if (type === "seeked") {
      this.seekedListeners.push(listener);
    }
  }

  fireSeeked(): void {
    for (const listener of this.seekedListeners.splice(0)) {
      listener();
    }
  }
}

/** Minimal media object without event support, to exercise the fallback
 * completion path in the controller. */
export interface PlainMedia {
  currentTime: number;
  paused: boolean;
  play(): void;
}

export function plainMedia(): PlainMedia & { playCalls: number } {
  return {
    currentTime: 0,
    paused: true,
    playCalls: 0,
    play() {
      this.playCalls += 1;
      this.paused = false;
    },
  };
}

interface TurnSpec {
  speaker: string;
  start: number;
  end: number;
}

function turnDoc(spec: TurnSpec, uttIndex: number): TurnDoc {
  return {
    speaker: spec.speaker,
    start_s: spec.start,
    end_s: spec.end,
    duration_s: spec.end - spec.start,
    summed_duration_s: spec.end - spec.start,
    utterance_indices: [uttIndex],
  };
}

const UNDEFINED_VOLATILITY: VolatilityDoc = {
  n_points: 0,
  raw_sigma: null,
  rate_scale: null,
  volatility: null,
  defined: false,
};

interface SegmentSpec {
  turns?: TurnSpec[];
  transitions?: number[][];
  language?: string;
  span?: [number, number];
  volatility?: VolatilityDoc;
}

/** Build a structurally valid report document for rendering edge cases the
 * CLI fixtures do not cover (isolated speakers, empty segments, large turn
 * counts). Only display-facing fields need to be realistic.
 */
export function syntheticReport(
  speakers: string[],
  spec: Partial<Record<SegmentLabel, SegmentSpec>>,
  opts: { split?: number; recorded?: number } = {}
): MeetingReport {
  const wholeTurns = spec.WHOLE?.turns ?? [];
  const split = opts.split ?? 60;
  const recorded = opts.recorded ?? Math.max(split * 2, ...wholeTurns.map((t) => t.end));

  const utterances: UtteranceDoc[] = wholeTurns.map((t, i) => ({
    index: i,
    speaker: t.speaker,
    start_s: t.start,
    end_s: t.end,
    text: `utterance ${i}`,
  }));

  const buildSegment = (label: SegmentLabel, fallbackSpan: [number, number]): SegmentDoc => {
    const segSpec = spec[label] ?? {};
    const turns = (segSpec.turns ?? []).map((t, i) => turnDoc(t, wholeTurns.indexOf(t) >= 0 ? wholeTurns.indexOf(t) : i));
    const participation: ParticipationRow[] = speakers.map((s) => ({
      speaker: s,
      speaking_time_s: turns.filter((t) => t.speaker === s).reduce((a, t) => a + t.duration_s, 0),
      participation_pct: 0,
      turn_count: turns.filter((t) => t.speaker === s).length,
    }));
    const transitions: TransitionMatrix = {
      speakers: [...speakers],
      counts: segSpec.transitions ?? speakers.map(() => speakers.map(() => 0)),
    };
    const [s0, s1] = segSpec.span ?? fallbackSpan;
    return {
      label,
      language: segSpec.language ?? "fr",
      span_start_s: s0,
      span_end_s: s1,
      turn_count: turns.length,
      turns,
      participation,
      transitions,
      volatility: segSpec.volatility ?? UNDEFINED_VOLATILITY,
      per_participant_volatility: speakers.map((s) => ({
        speaker: s,
        ...UNDEFINED_VOLATILITY,
      })),
    };
  };

  const doc: MeetingReport = {
    schema_version: 1,
    tool_version: "0.0.0-test",
    formula: "logreturn-stdev-sqrt-rate-v1",
    meeting: {
      meeting_id: "synthetic",
      group_id: "synthetic",
      week_index: 1,
      participants: [...speakers],
      first_half_language: "fr",
      second_half_language: "en",
      recorded_duration_s: recorded,
      changeover_s: null,
      media_url: null,
    },
    config: {
      duration_mode: "span",
      series_unit: "turns",
      rate_scale_mode: "per_minute",
      min_points: 3,
      gap_break_s: null,
      exclude_unknown_speaker: false,
    },
    split_s: split,
    speakers: [...speakers],
    diagnostics: {
      dropped_cue_count: 0,
      source_byte_count: 0,
      warning_count: 0,
      warnings: [],
    },
    utterances,
    segments: {
      WHOLE: buildSegment("WHOLE", [0, recorded]),
      FIRST_HALF: buildSegment("FIRST_HALF", [0, split]),
      SECOND_HALF: buildSegment("SECOND_HALF", [split, recorded]),
    },
    media_url: null,
  };
  return parseReport(JSON.stringify(doc));
}

/** Normalize a CSS color that jsdom may report as rgb(...) back to hex. */
export function colorNorm(value: string): string {
  const m = value.match(/rgb\((\d+),\s*(\d+),\s*(\d+)\)/);
  if (!m) {
    return value.toLowerCase();
  }
  const hex = (n: string) => Number(n).toString(16).padStart(2, "0");
  return `#${hex(m[1])}${hex(m[2])}${hex(m[3])}`;
}
