/** DOM renderers for the review page sections.
 *
 * Every renderer takes a container plus the current view state, clears the
 * container, and rebuilds it. The renderers only read the report; the
 * numbers they print are report fields passed through the formatters.
 */

import { fmtClock, fmtPct, fmtSecondsQty, fmtVolatility } from "./format";
import { ViewState, currentSegment, mediaSpanS } from "./state";
import {
  MeetingReport,
  SEGMENT_LABELS,
  SegmentDoc,
  SegmentLabel,
  TurnDoc,
  UtteranceDoc,
} from "./types";

export const PALETTE = [
  "#2563eb",
  "#dc2626",
  "#059669",
  "#d97706",
  "#7c3aed",
  "#0891b2",
  "#be185d",
  "#4d7c0f",
  "#9333ea",
  "#b45309",
];

const FALLBACK_COLOR = "#6b7280";

const SEGMENT_TITLES: Record<SegmentLabel, string> = {
  WHOLE: "Whole",
  FIRST_HALF: "First half",
  SECOND_HALF: "Second half",
};

export function speakerColor(report: MeetingReport, speaker: string): string {
  const idx = report.speakers.indexOf(speaker);
  return idx < 0 ? FALLBACK_COLOR : PALETTE[idx % PALETTE.length];
}

interface ElAttrs {
  [name: string]: string;
}

function el(
  tag: string,
  attrs?: ElAttrs,
  text?: string,
  children?: Element[]
): HTMLElement {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs ?? {})) {
    node.setAttribute(name, value);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  for (const child of children ?? []) {
    node.appendChild(child);
  }
  return node;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl(tag: string, attrs?: ElAttrs): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs ?? {})) {
    node.setAttribute(name, value);
  }
  return node;
}

export interface TimelineHandlers {
  onBarClick(turn: TurnDoc, startS: number): void;
  onSpeakerClick?(speaker: string): void;
}

/** Length of the timeline axis in seconds. */
function axisEndS(state: ViewState): number {
  const end = Math.max(mediaSpanS(state), state.report.split_s);
  return end > 0 ? end : 1;
}

function pickTickStepS(axisEnd: number): number {
  const steps = [5, 15, 30, 60, 120, 300, 600, 900, 1800, 3600];
  for (const step of steps) {
    if (axisEnd / step <= 8) {
      return step;
    }
  }
  return 7200;
}

interface TimelineBar {
  speaker: string;
  startS: number;
  endS: number;
  turn: TurnDoc;
  title: string;
}

function utteranceByIndex(report: MeetingReport): Map<number, UtteranceDoc> {
  const byIndex = new Map<number, UtteranceDoc>();
  for (const utt of report.utterances) {
    byIndex.set(utt.index, utt);
  }
  return byIndex;
}

function timelineBars(state: ViewState): TimelineBar[] {
  const seg = currentSegment(state);
  const bars: TimelineBar[] = [];
  if (!state.showUtterances) {
    for (const turn of seg.turns) {
      const range = `${fmtClock(turn.start_s)}-${fmtClock(turn.end_s)}`;
      bars.push({
        speaker: turn.speaker,
        startS: turn.start_s,
        endS: turn.end_s,
        turn,
        title: `${turn.speaker} ${range} (${turn.duration_s.toFixed(2)} s)`,
      });
    }
    return bars;
  }
  const byIndex = utteranceByIndex(state.report);
  for (const turn of seg.turns) {
    for (const idx of turn.utterance_indices) {
      const utt = byIndex.get(idx);
      if (!utt) {
        continue;
      }
      const range = `${fmtClock(utt.start_s)}-${fmtClock(utt.end_s)}`;
      bars.push({
        speaker: turn.speaker,
        startS: utt.start_s,
        endS: utt.end_s,
        turn,
        title: `${turn.speaker} ${range}: ${utt.text}`,
      });
    }
  }
  return bars;
}

export function renderTimeline(
  container: HTMLElement,
  state: ViewState,
  handlers: TimelineHandlers
): void {
  container.replaceChildren();
  const report = state.report;
  const axisEnd = axisEndS(state);
  const seg = currentSegment(state);
  const pct = (seconds: number) => (seconds / axisEnd) * 100;

  const lanesBySpeaker = new Map<string, HTMLElement>();
  const box = el("div", { class: "timeline", role: "list" });

  for (const speaker of report.speakers) {
    const lane = el("div", { class: "lane", "data-speaker": speaker });
    if (state.highlightedSpeaker === speaker) {
      lane.classList.add("hl");
    }
    const label = el(
      "span",
      { class: "lane-label", "data-speaker": speaker },
      speaker
    );
    label.style.color = speakerColor(report, speaker);
    lane.appendChild(label);
    lanesBySpeaker.set(speaker, lane);
    box.appendChild(lane);
  }

  for (const bar of timelineBars(state)) {
    const lane = lanesBySpeaker.get(bar.speaker);
    if (!lane) {
      continue;
    }
    const node = el("div", {
      class: state.showUtterances ? "turn utt-bar" : "turn",
      role: "button",
      tabindex: "0",
      title: bar.title,
      "data-start-s": String(bar.startS),
    });
    node.style.left = `${pct(bar.startS)}%`;
    node.style.width = `${Math.max(pct(bar.endS - bar.startS), 0.15)}%`;
    node.style.background = speakerColor(report, bar.speaker);
    if (state.selectedTurn === bar.turn) {
      node.classList.add("selected");
    }
    (node as HTMLElement & { _turn?: TurnDoc })._turn = bar.turn;
    lane.appendChild(node);
  }

  if (state.segment !== "WHOLE") {
    const mask = el("div", { class: "mask" });
    const from = state.segment === "FIRST_HALF" ? report.split_s : 0;
    const to = state.segment === "FIRST_HALF" ? axisEnd : report.split_s;
    mask.style.left = `${pct(from)}%`;
    mask.style.width = `${Math.max(pct(to - from), 0)}%`;
    box.appendChild(mask);
  }

  if (report.split_s > 0 && report.split_s < axisEnd) {
    const split = el("div", { class: "splitline", title: "language changeover" });
    split.style.left = `${pct(report.split_s)}%`;
    box.appendChild(split);
    const left = el(
      "span",
      { class: "split-label left" },
      report.meeting.first_half_language
    );
    left.style.right = `${100 - pct(report.split_s)}%`;
    const right = el(
      "span",
      { class: "split-label right" },
      report.meeting.second_half_language
    );
    right.style.left = `${pct(report.split_s)}%`;
    box.appendChild(left);
    box.appendChild(right);
  }

  if (state.mediaPositionS > 0) {
    const cursor = el("div", { class: "cursor" });
    cursor.style.left = `${pct(state.mediaPositionS)}%`;
    box.appendChild(cursor);
  }

  box.addEventListener("click", (event) => {
    const target = event.target as HTMLElement | null;
    if (!target) {
      return;
    }
    const barNode = target.closest("[data-start-s]") as
      | (HTMLElement & { _turn?: TurnDoc })
      | null;
    if (barNode && barNode._turn) {
      handlers.onBarClick(barNode._turn, Number(barNode.dataset.startS));
      return;
    }
    const label = target.closest(".lane-label") as HTMLElement | null;
    if (label && handlers.onSpeakerClick) {
      handlers.onSpeakerClick(label.dataset.speaker ?? "");
    }
  });

  const axis = el("div", { class: "axis" });
  const step = pickTickStepS(axisEnd);
  for (let t = 0; t <= axisEnd; t += step) {
    const tick = el("span", { class: "tick" }, fmtClock(t));
    tick.style.left = `${pct(t)}%`;
    axis.appendChild(tick);
  }

  const caption = el(
    "div",
    { class: "seg-caption" },
    `${SEGMENT_TITLES[seg.label]} segment, ` +
      `${fmtClock(seg.span_start_s)}-${fmtClock(seg.span_end_s)}, ` +
      `${seg.turn_count} turns (${seg.language})`
  );

  container.appendChild(box);
  container.appendChild(axis);
  container.appendChild(caption);
}

export interface ArcLayout {
  speaker: string;
  index: number;
  a0: number;
  a1: number;
  isolated: boolean;
}

function polar(cx: number, cy: number, r: number, angle: number): [number, number] {
  return [cx + r * Math.cos(angle), cy + r * Math.sin(angle)];
}

function arcPath(
  cx: number,
  cy: number,
  r0: number,
  r1: number,
  a0: number,
  a1: number
): string {
  const [ox0, oy0] = polar(cx, cy, r1, a0);
  const [ox1, oy1] = polar(cx, cy, r1, a1);
  const [ix0, iy0] = polar(cx, cy, r0, a1);
  const [ix1, iy1] = polar(cx, cy, r0, a0);
  const large = a1 - a0 > Math.PI ? 1 : 0;
  return (
    `M ${ox0.toFixed(2)} ${oy0.toFixed(2)} ` +
    `A ${r1} ${r1} 0 ${large} 1 ${ox1.toFixed(2)} ${oy1.toFixed(2)} ` +
    `L ${ix0.toFixed(2)} ${iy0.toFixed(2)} ` +
    `A ${r0} ${r0} 0 ${large} 0 ${ix1.toFixed(2)} ${iy1.toFixed(2)} Z`
  );
}

export function chordLayout(seg: SegmentDoc): ArcLayout[] {
  const speakers = seg.transitions.speakers;
  const counts = seg.transitions.counts;
  const n = speakers.length;
  if (n === 0) {
    return [];
  }
  const turnCount = new Map<string, number>();
  for (const row of seg.participation) {
    turnCount.set(row.speaker, row.turn_count);
  }
  const weights = speakers.map((s) => turnCount.get(s) ?? 0);
  const totalWeight = weights.reduce((a, b) => a + b, 0);

  const pad = 0.06;
  const sliver = 0.08;
  const usable = 2 * Math.PI - pad * n;
  const zeroes = weights.filter((w) => w === 0).length;
  const proportionalRoom = usable - sliver * zeroes;

  const layouts: ArcLayout[] = [];
  let angle = -Math.PI / 2;
  for (let i = 0; i < n; i += 1) {
    let size: number;
    if (totalWeight === 0) {
      size = usable / n;
    } else if (weights[i] === 0) {
      size = sliver;
    } else {
      size = (proportionalRoom * weights[i]) / totalWeight;
    }
    const rowTotal = counts[i].reduce((a, b) => a + b, 0);
    const colTotal = counts.reduce((a, row) => a + row[i], 0);
    layouts.push({
      speaker: speakers[i],
      index: i,
      a0: angle,
      a1: angle + size,
      isolated: rowTotal === 0 && colTotal === 0,
    });
    angle += size + pad;
  }
  return layouts;
}

export function renderChord(container: HTMLElement, state: ViewState): void {
  container.replaceChildren();
  const seg = currentSegment(state);
  const layouts = chordLayout(seg);

  const size = 340;
  const c = size / 2;
  const r1 = 132;
  const r0 = 112;
  const labelR = 146;

  const svg = svgEl("svg", {
    viewBox: `0 0 ${size} ${size}`,
    class: "chord",
    role: "img",
    "aria-label": "speaker transition diagram",
  });

  if (layouts.length === 0) {
    container.appendChild(el("p", { class: "undef" }, "no speakers in this segment"));
    return;
  }

  const counts = seg.transitions.counts;
  let maxCount = 0;
  for (let i = 0; i < counts.length; i += 1) {
    for (let j = 0; j < counts[i].length; j += 1) {
      if (i !== j && counts[i][j] > maxCount) {
        maxCount = counts[i][j];
      }
    }
  }

  const mid = (arc: ArcLayout, frac: number) => arc.a0 + (arc.a1 - arc.a0) * frac;

  for (const from of layouts) {
    for (const to of layouts) {
      if (from.index === to.index) {
        continue;
      }
      const count = counts[from.index][to.index];
      if (count <= 0) {
        continue;
      }
      const [x0, y0] = polar(c, c, r0, mid(from, 1 / 3));
      const [x1, y1] = polar(c, c, r0, mid(to, 2 / 3));
      const width = 1.5 + (maxCount > 0 ? (8 * count) / maxCount : 0);
      const ribbon = svgEl("path", {
        d: `M ${x0.toFixed(2)} ${y0.toFixed(2)} Q ${c} ${c} ${x1.toFixed(2)} ${y1.toFixed(2)}`,
        class: "ribbon",
        fill: "none",
        stroke: speakerColor(state.report, from.speaker),
        "stroke-width": width.toFixed(2),
        "data-from": from.speaker,
        "data-to": to.speaker,
        "data-count": String(count),
      });
      const title = svgEl("title");
      title.textContent = `${from.speaker} → ${to.speaker}: ${count}`;
      ribbon.appendChild(title);
      svg.appendChild(ribbon);

      const t = 0.33;
      const lx = (1 - t) * (1 - t) * x0 + 2 * t * (1 - t) * c + t * t * x1;
      const ly = (1 - t) * (1 - t) * y0 + 2 * t * (1 - t) * c + t * t * y1;
      const label = svgEl("text", {
        x: lx.toFixed(2),
        y: ly.toFixed(2),
        class: "ribbon-label",
        "data-from": from.speaker,
        "data-to": to.speaker,
      });
      label.textContent = String(count);
      svg.appendChild(label);
    }
  }

  const turnCount = new Map<string, number>();
  for (const row of seg.participation) {
    turnCount.set(row.speaker, row.turn_count);
  }

  for (const arc of layouts) {
    const path = svgEl("path", {
      d: arcPath(c, c, r0, r1, arc.a0, arc.a1),
      class: arc.isolated ? "arc isolated" : "arc",
      fill: speakerColor(state.report, arc.speaker),
      "data-speaker": arc.speaker,
    });
    const title = svgEl("title");
    title.textContent = `${arc.speaker}: ${turnCount.get(arc.speaker) ?? 0} turns`;
    path.appendChild(title);
    svg.appendChild(path);

    const angle = mid(arc, 0.5);
    const [lx, ly] = polar(c, c, labelR, angle);
    const text = svgEl("text", {
      x: lx.toFixed(2),
      y: ly.toFixed(2),
      class: arc.isolated ? "arc-label isolated" : "arc-label",
      "text-anchor": Math.cos(angle) > 0.2 ? "start" : Math.cos(angle) < -0.2 ? "end" : "middle",
    });
    text.textContent = arc.speaker;
    svg.appendChild(text);
  }

  container.appendChild(svg);
  container.appendChild(
    el(
      "p",
      { class: "chord-caption" },
      "arc size: turns per speaker · ribbon width: transition count (labeled)"
    )
  );
}

export function renderVolatilityPanel(
  container: HTMLElement,
  state: ViewState
): void {
  container.replaceChildren();
  const report = state.report;
  const values = SEGMENT_LABELS.map(
    (label) => report.segments[label].volatility.volatility
  );
  const defined = values.filter((v): v is number => v !== null);
  const maxValue = defined.length > 0 ? Math.max(...defined) : 0;

  const chart = el("div", { class: "vol-chart" });
  for (const label of SEGMENT_LABELS) {
    const seg = report.segments[label];
    const value = seg.volatility.volatility;
    const col = el("div", { class: "vol-col", "data-segment": label });
    if (state.segment === label) {
      col.classList.add("active");
    }
    const area = el("div", { class: "vol-bar-area" });
    if (value === null) {
      area.appendChild(el("span", { class: "undef-marker" }, "n/a"));
    } else {
      const bar = el("div", { class: "vol-bar" });
      const height = maxValue > 0 ? Math.max((value / maxValue) * 100, 2) : 2;
      bar.style.height = `${height}%`;
      area.appendChild(bar);
    }
    col.appendChild(area);
    col.appendChild(
      el("div", { class: "vol-value num" }, fmtVolatility(value))
    );
    col.appendChild(el("div", { class: "vol-name" }, SEGMENT_TITLES[label]));
    col.appendChild(el("div", { class: "vol-lang" }, seg.language));
    chart.appendChild(col);
  }
  container.appendChild(chart);

  const seg = currentSegment(state);
  const table = el("table", { class: "pp-table" });
  const thead = el("thead", undefined, undefined, [
    el("tr", undefined, undefined, [
      el("th", undefined, "speaker"),
      el("th", { class: "num" }, "points"),
      el("th", { class: "num" }, "volatility"),
    ]),
  ]);
  const tbody = el("tbody");
  for (const row of seg.per_participant_volatility) {
    const tr = el("tr", { "data-speaker": row.speaker }, undefined, [
      el("td", undefined, row.speaker),
      el("td", { class: "num" }, String(row.n_points)),
      el(
        "td",
        { class: row.defined ? "num" : "num undef" },
        fmtVolatility(row.volatility)
      ),
    ]);
    tbody.appendChild(tr);
  }
  table.appendChild(thead);
  table.appendChild(tbody);
  container.appendChild(
    el("h3", undefined, `Per participant (${SEGMENT_TITLES[seg.label]})`)
  );
  container.appendChild(table);
}

export function renderParticipation(
  container: HTMLElement,
  state: ViewState
): void {
  container.replaceChildren();
  const seg = currentSegment(state);
  const table = el("table", { class: "participation-table" });
  const thead = el("thead", undefined, undefined, [
    el("tr", undefined, undefined, [
      el("th", undefined, "speaker"),
      el("th", { class: "num" }, "speaking time"),
      el("th", { class: "num" }, "share"),
      el("th", { class: "num" }, "turns"),
    ]),
  ]);
  const tbody = el("tbody");
  for (const row of seg.participation) {
    const dot = el("span", { class: "dot" });
    dot.style.background = speakerColor(state.report, row.speaker);
    const who = el("td", undefined, undefined, [dot]);
    who.appendChild(document.createTextNode(` ${row.speaker}`));
    const tr = el("tr", { "data-speaker": row.speaker }, undefined, [
      who,
      el("td", { class: "num time" }, fmtSecondsQty(row.speaking_time_s)),
      el("td", { class: "num pct" }, fmtPct(row.participation_pct)),
      el("td", { class: "num turns" }, String(row.turn_count)),
    ]);
    if (state.highlightedSpeaker === row.speaker) {
      tr.classList.add("hl");
    }
    tbody.appendChild(tr);
  }
  table.appendChild(thead);
  table.appendChild(tbody);
  container.appendChild(table);
}

export function renderTranscript(container: HTMLElement, state: ViewState): void {
  container.replaceChildren();
  const turn = state.selectedTurn;
  if (!turn) {
    container.appendChild(
      el("p", { class: "hint" }, "Click a turn bar to inspect its utterances.")
    );
    return;
  }
  const range = `${fmtClock(turn.start_s)}-${fmtClock(turn.end_s)}`;
  container.appendChild(
    el("h3", undefined, `Turn by ${turn.speaker}, ${range}`)
  );
  const byIndex = utteranceByIndex(state.report);
  const list = el("div", { class: "utt-list" });
  for (const idx of turn.utterance_indices) {
    const utt = byIndex.get(idx);
    if (!utt) {
      continue;
    }
    const node = el("div", { class: "utt", "data-utterance-index": String(utt.index) });
    node.appendChild(el("span", { class: "when" }, fmtClock(utt.start_s)));
    const who = el("span", { class: "who" }, utt.speaker);
    who.style.color = speakerColor(state.report, utt.speaker);
    node.appendChild(who);
    node.appendChild(document.createTextNode(utt.text));
    list.appendChild(node);
  }
  container.appendChild(list);
}

export function renderHeader(container: HTMLElement, report: MeetingReport): void {
  container.replaceChildren();
  const whole = report.segments.WHOLE;
  container.appendChild(el("h1", undefined, `Meeting ${report.meeting.meeting_id}`));
  container.appendChild(
    el(
      "p",
      { class: "sub" },
      `group ${report.meeting.group_id} · week ${report.meeting.week_index}` +
        ` · ${report.meeting.first_half_language} then ${report.meeting.second_half_language}`
    )
  );
  const chips = el("div", { class: "chips" });
  const pairs: [string, string][] = [
    ["span", `${fmtClock(whole.span_start_s)} - ${fmtClock(whole.span_end_s)}`],
    ["split", fmtClock(report.split_s)],
    ["turns", String(whole.turn_count)],
    ["utterances", String(report.utterances.length)],
    ["dropped cues", String(report.diagnostics.dropped_cue_count)],
    ["volatility", fmtVolatility(whole.volatility.volatility)],
  ];
  for (const [name, value] of pairs) {
    chips.appendChild(el("span", { class: "chip" }, `${name}: ${value}`));
  }
  container.appendChild(chips);
}
