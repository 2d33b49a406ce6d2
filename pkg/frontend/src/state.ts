import {
  MeetingReport,
  SEGMENT_LABELS,
  SegmentDoc,
  SegmentLabel,
  TurnDoc,
} from "./types";

/** UI state for the review page.
 *
 * The report is immutable; all view state lives here. Transitions return a
 * fresh object so renders can compare by identity and tests stay simple.
 */
export interface ViewState {
  report: MeetingReport;
  segment: SegmentLabel;
  mediaPositionS: number;
  highlightedSpeaker: string | null;
  selectedTurn: TurnDoc | null;
  showUtterances: boolean;
}

export function createViewState(report: MeetingReport): ViewState {
  return {
    report,
    segment: "WHOLE",
    mediaPositionS: 0,
    highlightedSpeaker: null,
    selectedTurn: null,
    showUtterances: false,
  };
}

export function currentSegment(state: ViewState): SegmentDoc {
  return state.report.segments[state.segment];
}

/** Upper bound for the media position: the recorded duration when known,
 * otherwise the observed span of the whole meeting. */
export function mediaSpanS(state: ViewState): number {
  const whole = state.report.segments.WHOLE;
  const recorded = state.report.meeting.recorded_duration_s;
  return Math.max(whole.span_end_s, recorded ?? 0);
}

export function selectSegment(state: ViewState, label: string): ViewState {
  if (!SEGMENT_LABELS.includes(label as SegmentLabel)) {
    throw new Error(`unknown segment label: ${label}`);
  }
  return { ...state, segment: label as SegmentLabel, selectedTurn: null };
}

export function setMediaPosition(state: ViewState, seconds: number): ViewState {
  const span = mediaSpanS(state);
  let position = Number.isFinite(seconds) ? seconds : 0;
  position = Math.min(Math.max(position, 0), span);
  return { ...state, mediaPositionS: position };
}

export function selectTurn(state: ViewState, turn: TurnDoc | null): ViewState {
  return { ...state, selectedTurn: turn };
}

export function highlightSpeaker(
  state: ViewState,
  speaker: string | null
): ViewState {
  if (speaker !== null && !state.report.speakers.includes(speaker)) {
    throw new Error(`unknown speaker: ${speaker}`);
  }
  return { ...state, highlightedSpeaker: speaker };
}

export function toggleUtterances(state: ViewState): ViewState {
  return { ...state, showUtterances: !state.showUtterances };
}
