"use strict";
(() => {
  // src/media.ts
  var MediaController = class {
    constructor(notice = () => {
    }) {
      this.media = null;
      this.failed = false;
      this.notice = notice;
    }
    attach(media) {
      this.media = media;
      this.failed = false;
    }
    detach() {
      this.media = null;
    }
    /** Record that the media source failed to load. Playback is disabled but
     * the rest of the page keeps working; the user just gets a notice. */
    markFailed(message) {
      if (!this.failed) {
        this.failed = true;
        this.notice(message);
      }
    }
    get available() {
      return this.media !== null && !this.failed;
    }
    /** Seek to the given position and start playback. Returns true when a seek
     * was issued, false when no usable media is attached. Playback that is
     * already running keeps running; only the position jumps. */
    seekTo(seconds, onDone) {
      const media = this.media;
      if (media === null || this.failed) {
        return false;
      }
      if (onDone) {
        if (typeof media.addEventListener === "function") {
          media.addEventListener("seeked", onDone, { once: true });
        } else {
          queueMicrotask(onDone);
        }
      }
      media.currentTime = seconds;
      try {
        const result = media.play();
        if (result && typeof result.catch === "function") {
          result.catch((err) => {
            this.notice(`playback failed: ${String(err)}`);
          });
        }
      } catch (err) {
        this.notice(`playback failed: ${String(err)}`);
      }
      return true;
    }
  };

  // src/format.ts
  function fmtVolatility(value) {
    return value === null ? "n/a" : value.toFixed(3);
  }
  function fmtPct(value) {
    return value.toFixed(1) + "%";
  }
  function fmtSecondsQty(value) {
    return value.toFixed(1) + " s";
  }
  function fmtClock(seconds) {
    const total = Math.max(0, Math.floor(seconds));
    const h = Math.floor(total / 3600);
    const m = Math.floor(total % 3600 / 60);
    const s = total % 60;
    const mm = h > 0 && m < 10 ? `0${m}` : String(m);
    const ss = s < 10 ? `0${s}` : String(s);
    return h > 0 ? `${h}:${mm}:${ss}` : `${mm}:${ss}`;
  }

  // src/types.ts
  var SEGMENT_LABELS = [
    "WHOLE",
    "FIRST_HALF",
    "SECOND_HALF"
  ];
  function deepFreeze(value) {
    if (value !== null && typeof value === "object" && !Object.isFrozen(value)) {
      Object.freeze(value);
      for (const key of Object.getOwnPropertyNames(value)) {
        deepFreeze(value[key]);
      }
    }
    return value;
  }
  function parseReport(json) {
    let raw;
    try {
      raw = JSON.parse(json);
    } catch (err) {
      throw new Error(`report data is not valid JSON: ${String(err)}`);
    }
    if (raw === null || typeof raw !== "object" || Array.isArray(raw)) {
      throw new Error("report data is not a JSON object");
    }
    const doc = raw;
    for (const key of ["meeting", "segments", "speakers", "utterances"]) {
      if (!(key in doc)) {
        throw new Error(`report data is missing the "${key}" field`);
      }
    }
    const segments = doc.segments;
    for (const label of SEGMENT_LABELS) {
      if (!(label in segments)) {
        throw new Error(`report data is missing the ${label} segment`);
      }
    }
    if (!Array.isArray(doc.speakers)) {
      throw new Error('report field "speakers" is not a list');
    }
    return deepFreeze(raw);
  }

  // src/state.ts
  function createViewState(report) {
    return {
      report,
      segment: "WHOLE",
      mediaPositionS: 0,
      highlightedSpeaker: null,
      selectedTurn: null,
      showUtterances: false
    };
  }
  function currentSegment(state) {
    return state.report.segments[state.segment];
  }
  function mediaSpanS(state) {
    const whole = state.report.segments.WHOLE;
    const recorded = state.report.meeting.recorded_duration_s;
    return Math.max(whole.span_end_s, recorded ?? 0);
  }
  function selectSegment(state, label) {
    if (!SEGMENT_LABELS.includes(label)) {
      throw new Error(`unknown segment label: ${label}`);
    }
    return { ...state, segment: label, selectedTurn: null };
  }
  function setMediaPosition(state, seconds) {
    const span = mediaSpanS(state);
    let position = Number.isFinite(seconds) ? seconds : 0;
    position = Math.min(Math.max(position, 0), span);
    return { ...state, mediaPositionS: position };
  }
  function selectTurn(state, turn) {
    return { ...state, selectedTurn: turn };
  }
  function highlightSpeaker(state, speaker) {
    if (speaker !== null && !state.report.speakers.includes(speaker)) {
      throw new Error(`unknown speaker: ${speaker}`);
    }
    return { ...state, highlightedSpeaker: speaker };
  }
  function toggleUtterances(state) {
    return { ...state, showUtterances: !state.showUtterances };
  }

  // src/render.ts
  var PALETTE = [
    "#2563eb",
    "#dc2626",
    "#059669",
    "#d97706",
    "#7c3aed",
    "#0891b2",
    "#be185d",
    "#4d7c0f",
    "#9333ea",
    "#b45309"
  ];
  var FALLBACK_COLOR = "#6b7280";
  var SEGMENT_TITLES = {
    WHOLE: "Whole",
    FIRST_HALF: "First half",
    SECOND_HALF: "Second half"
  };
  function speakerColor(report, speaker) {
    const idx = report.speakers.indexOf(speaker);
    return idx < 0 ? FALLBACK_COLOR : PALETTE[idx % PALETTE.length];
  }
  function el(tag, attrs, text, children) {
    const node = document.createElement(tag);
    for (const [name, value] of Object.entries(attrs ?? {})) {
      node.setAttribute(name, value);
    }
    if (text !== void 0) {
      node.textContent = text;
    }
    for (const child of children ?? []) {
      node.appendChild(child);
    }
    return node;
  }
  var SVG_NS = "http://www.w3.org/2000/svg";
  function svgEl(tag, attrs) {
    const node = document.createElementNS(SVG_NS, tag);
    for (const [name, value] of Object.entries(attrs ?? {})) {
      node.setAttribute(name, value);
    }
    return node;
  }
  function axisEndS(state) {
    const end = Math.max(mediaSpanS(state), state.report.split_s);
    return end > 0 ? end : 1;
  }
  function pickTickStepS(axisEnd) {
    const steps = [5, 15, 30, 60, 120, 300, 600, 900, 1800, 3600];
    for (const step of steps) {
      if (axisEnd / step <= 8) {
        return step;
      }
    }
    return 7200;
  }
  function utteranceByIndex(report) {
    const byIndex = /* @__PURE__ */ new Map();
    for (const utt of report.utterances) {
      byIndex.set(utt.index, utt);
    }
    return byIndex;
  }
  function timelineBars(state) {
    const seg = currentSegment(state);
    const bars = [];
    if (!state.showUtterances) {
      for (const turn of seg.turns) {
        const range = `${fmtClock(turn.start_s)}-${fmtClock(turn.end_s)}`;
        bars.push({
          speaker: turn.speaker,
          startS: turn.start_s,
          endS: turn.end_s,
          turn,
          title: `${turn.speaker} ${range} (${turn.duration_s.toFixed(2)} s)`
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
          title: `${turn.speaker} ${range}: ${utt.text}`
        });
      }
    }
    return bars;
  }
  function renderTimeline(container, state, handlers) {
    container.replaceChildren();
    const report = state.report;
    const axisEnd = axisEndS(state);
    const seg = currentSegment(state);
    const pct = (seconds) => seconds / axisEnd * 100;
    const lanesBySpeaker = /* @__PURE__ */ new Map();
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
        "data-start-s": String(bar.startS)
      });
      node.style.left = `${pct(bar.startS)}%`;
      node.style.width = `${Math.max(pct(bar.endS - bar.startS), 0.15)}%`;
      node.style.background = speakerColor(report, bar.speaker);
      if (state.selectedTurn === bar.turn) {
        node.classList.add("selected");
      }
      node._turn = bar.turn;
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
      const target = event.target;
      if (!target) {
        return;
      }
      const barNode = target.closest("[data-start-s]");
      if (barNode && barNode._turn) {
        handlers.onBarClick(barNode._turn, Number(barNode.dataset.startS));
        return;
      }
      const label = target.closest(".lane-label");
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
      `${SEGMENT_TITLES[seg.label]} segment, ${fmtClock(seg.span_start_s)}-${fmtClock(seg.span_end_s)}, ${seg.turn_count} turns (${seg.language})`
    );
    container.appendChild(box);
    container.appendChild(axis);
    container.appendChild(caption);
  }
  function polar(cx, cy, r, angle) {
    return [cx + r * Math.cos(angle), cy + r * Math.sin(angle)];
  }
  function arcPath(cx, cy, r0, r1, a0, a1) {
    const [ox0, oy0] = polar(cx, cy, r1, a0);
    const [ox1, oy1] = polar(cx, cy, r1, a1);
    const [ix0, iy0] = polar(cx, cy, r0, a1);
    const [ix1, iy1] = polar(cx, cy, r0, a0);
    const large = a1 - a0 > Math.PI ? 1 : 0;
    return `M ${ox0.toFixed(2)} ${oy0.toFixed(2)} A ${r1} ${r1} 0 ${large} 1 ${ox1.toFixed(2)} ${oy1.toFixed(2)} L ${ix0.toFixed(2)} ${iy0.toFixed(2)} A ${r0} ${r0} 0 ${large} 0 ${ix1.toFixed(2)} ${iy1.toFixed(2)} Z`;
  }
  function chordLayout(seg) {
    const speakers = seg.transitions.speakers;
    const counts = seg.transitions.counts;
    const n = speakers.length;
    if (n === 0) {
      return [];
    }
    const turnCount = /* @__PURE__ */ new Map();
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
    const layouts = [];
    let angle = -Math.PI / 2;
    for (let i = 0; i < n; i += 1) {
      let size;
      if (totalWeight === 0) {
        size = usable / n;
      } else if (weights[i] === 0) {
        size = sliver;
      } else {
        size = proportionalRoom * weights[i] / totalWeight;
      }
      const rowTotal = counts[i].reduce((a, b) => a + b, 0);
      const colTotal = counts.reduce((a, row) => a + row[i], 0);
      layouts.push({
        speaker: speakers[i],
        index: i,
        a0: angle,
        a1: angle + size,
        isolated: rowTotal === 0 && colTotal === 0
      });
      angle += size + pad;
    }
    return layouts;
  }
  function renderChord(container, state) {
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
      "aria-label": "speaker transition diagram"
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
    const mid = (arc, frac) => arc.a0 + (arc.a1 - arc.a0) * frac;
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
        const width = 1.5 + (maxCount > 0 ? 8 * count / maxCount : 0);
        const ribbon = svgEl("path", {
          d: `M ${x0.toFixed(2)} ${y0.toFixed(2)} Q ${c} ${c} ${x1.toFixed(2)} ${y1.toFixed(2)}`,
          class: "ribbon",
          fill: "none",
          stroke: speakerColor(state.report, from.speaker),
          "stroke-width": width.toFixed(2),
          "data-from": from.speaker,
          "data-to": to.speaker,
          "data-count": String(count)
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
          "data-to": to.speaker
        });
        label.textContent = String(count);
        svg.appendChild(label);
      }
    }
    const turnCount = /* @__PURE__ */ new Map();
    for (const row of seg.participation) {
      turnCount.set(row.speaker, row.turn_count);
    }
    for (const arc of layouts) {
      const path = svgEl("path", {
        d: arcPath(c, c, r0, r1, arc.a0, arc.a1),
        class: arc.isolated ? "arc isolated" : "arc",
        fill: speakerColor(state.report, arc.speaker),
        "data-speaker": arc.speaker
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
        "text-anchor": Math.cos(angle) > 0.2 ? "start" : Math.cos(angle) < -0.2 ? "end" : "middle"
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
  function renderVolatilityPanel(container, state) {
    container.replaceChildren();
    const report = state.report;
    const values = SEGMENT_LABELS.map(
      (label) => report.segments[label].volatility.volatility
    );
    const defined = values.filter((v) => v !== null);
    const maxValue = defined.length > 0 ? Math.max(...defined) : 0;
    const chart = el("div", { class: "vol-chart" });
    for (const label of SEGMENT_LABELS) {
      const seg2 = report.segments[label];
      const value = seg2.volatility.volatility;
      const col = el("div", { class: "vol-col", "data-segment": label });
      if (state.segment === label) {
        col.classList.add("active");
      }
      const area = el("div", { class: "vol-bar-area" });
      if (value === null) {
        area.appendChild(el("span", { class: "undef-marker" }, "n/a"));
      } else {
        const bar = el("div", { class: "vol-bar" });
        const height = maxValue > 0 ? Math.max(value / maxValue * 100, 2) : 2;
        bar.style.height = `${height}%`;
        area.appendChild(bar);
      }
      col.appendChild(area);
      col.appendChild(
        el("div", { class: "vol-value num" }, fmtVolatility(value))
      );
      col.appendChild(el("div", { class: "vol-name" }, SEGMENT_TITLES[label]));
      col.appendChild(el("div", { class: "vol-lang" }, seg2.language));
      chart.appendChild(col);
    }
    container.appendChild(chart);
    const seg = currentSegment(state);
    const table = el("table", { class: "pp-table" });
    const thead = el("thead", void 0, void 0, [
      el("tr", void 0, void 0, [
        el("th", void 0, "speaker"),
        el("th", { class: "num" }, "points"),
        el("th", { class: "num" }, "volatility")
      ])
    ]);
    const tbody = el("tbody");
    for (const row of seg.per_participant_volatility) {
      const tr = el("tr", { "data-speaker": row.speaker }, void 0, [
        el("td", void 0, row.speaker),
        el("td", { class: "num" }, String(row.n_points)),
        el(
          "td",
          { class: row.defined ? "num" : "num undef" },
          fmtVolatility(row.volatility)
        )
      ]);
      tbody.appendChild(tr);
    }
    table.appendChild(thead);
    table.appendChild(tbody);
    container.appendChild(
      el("h3", void 0, `Per participant (${SEGMENT_TITLES[seg.label]})`)
    );
    container.appendChild(table);
  }
  function renderParticipation(container, state) {
    container.replaceChildren();
    const seg = currentSegment(state);
    const table = el("table", { class: "participation-table" });
    const thead = el("thead", void 0, void 0, [
      el("tr", void 0, void 0, [
        el("th", void 0, "speaker"),
        el("th", { class: "num" }, "speaking time"),
        el("th", { class: "num" }, "share"),
        el("th", { class: "num" }, "turns")
      ])
    ]);
    const tbody = el("tbody");
    for (const row of seg.participation) {
      const dot = el("span", { class: "dot" });
      dot.style.background = speakerColor(state.report, row.speaker);
      const who = el("td", void 0, void 0, [dot]);
      who.appendChild(document.createTextNode(` ${row.speaker}`));
      const tr = el("tr", { "data-speaker": row.speaker }, void 0, [
        who,
        el("td", { class: "num time" }, fmtSecondsQty(row.speaking_time_s)),
        el("td", { class: "num pct" }, fmtPct(row.participation_pct)),
        el("td", { class: "num turns" }, String(row.turn_count))
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
  function renderTranscript(container, state) {
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
      el("h3", void 0, `Turn by ${turn.speaker}, ${range}`)
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
  function renderHeader(container, report) {
    container.replaceChildren();
    const whole = report.segments.WHOLE;
    container.appendChild(el("h1", void 0, `Meeting ${report.meeting.meeting_id}`));
    container.appendChild(
      el(
        "p",
        { class: "sub" },
        `group ${report.meeting.group_id} · week ${report.meeting.week_index} · ${report.meeting.first_half_language} then ${report.meeting.second_half_language}`
      )
    );
    const chips = el("div", { class: "chips" });
    const pairs = [
      ["span", `${fmtClock(whole.span_start_s)} - ${fmtClock(whole.span_end_s)}`],
      ["split", fmtClock(report.split_s)],
      ["turns", String(whole.turn_count)],
      ["utterances", String(report.utterances.length)],
      ["dropped cues", String(report.diagnostics.dropped_cue_count)],
      ["volatility", fmtVolatility(whole.volatility.volatility)]
    ];
    for (const [name, value] of pairs) {
      chips.appendChild(el("span", { class: "chip" }, `${name}: ${value}`));
    }
    container.appendChild(chips);
  }

  // src/page.ts
  function section(className, heading) {
    const node = document.createElement("section");
    node.className = className;
    if (heading) {
      const h2 = document.createElement("h2");
      h2.textContent = heading;
      node.appendChild(h2);
    }
    return node;
  }
  var ReviewPage = class {
    constructor(root, report) {
      this.noticesEl = null;
      this.timelineEl = null;
      this.transcriptEl = null;
      this.chordEl = null;
      this.volatilityEl = null;
      this.participationEl = null;
      this.onBarClick = (turn, startS) => {
        this.state = selectTurn(this.state, turn);
        const sought = this.controller.seekTo(startS);
        if (sought) {
          this.state = setMediaPosition(this.state, startS);
        }
        this.renderTimelineOnly();
        this.renderTranscriptOnly();
      };
      this.onSpeakerClick = (speaker) => {
        if (!this.state.report.speakers.includes(speaker)) {
          return;
        }
        const next = this.state.highlightedSpeaker === speaker ? null : speaker;
        this.state = highlightSpeaker(this.state, next);
        this.renderTimelineOnly();
        if (this.participationEl) {
          renderParticipation(this.participationEl, this.state);
        }
      };
      this.root = root;
      this.state = createViewState(report);
      this.controller = new MediaController((msg) => this.showNotice(msg));
    }
    /** Current view state, exposed for tests and debugging. */
    getState() {
      return this.state;
    }
    mount() {
      const report = this.state.report;
      this.root.replaceChildren();
      const main = document.createElement("main");
      const header = section("header-block");
      renderHeader(header, report);
      main.appendChild(header);
      this.noticesEl = document.createElement("div");
      this.noticesEl.className = "notices";
      this.noticesEl.setAttribute("role", "status");
      main.appendChild(this.noticesEl);
      const mediaUrl = report.media_url;
      if (mediaUrl) {
        main.appendChild(this.buildMediaBlock(mediaUrl));
      }
      main.appendChild(this.buildControls());
      const timelineSection = section("timeline-section", "Timeline");
      this.timelineEl = document.createElement("div");
      this.timelineEl.className = "timeline-holder";
      timelineSection.appendChild(this.timelineEl);
      main.appendChild(timelineSection);
      const transcriptSection = section("transcript-section", "Selected turn");
      this.transcriptEl = document.createElement("div");
      this.transcriptEl.id = "transcript";
      transcriptSection.appendChild(this.transcriptEl);
      main.appendChild(transcriptSection);
      const grid = document.createElement("div");
      grid.className = "panel-grid";
      const chordSection = section("chord-section", "Speaker transitions");
      this.chordEl = document.createElement("div");
      this.chordEl.className = "chord-holder";
      chordSection.appendChild(this.chordEl);
      grid.appendChild(chordSection);
      const volSection = section("volatility-section", "Volatility");
      this.volatilityEl = document.createElement("div");
      this.volatilityEl.className = "volatility-holder";
      volSection.appendChild(this.volatilityEl);
      grid.appendChild(volSection);
      const partSection = section("participation-section", "Participation");
      this.participationEl = document.createElement("div");
      this.participationEl.className = "participation-holder";
      partSection.appendChild(this.participationEl);
      grid.appendChild(partSection);
      main.appendChild(grid);
      this.root.appendChild(main);
      this.renderDynamic();
    }
    /** Attach a playback target. The page calls this with its own <audio>
     * element; tests call it with a fake. */
    attachMedia(media) {
      this.controller.attach(media);
    }
    /** Report a media load failure. Playback is disabled, everything else on
     * the page keeps working. */
    notifyMediaFailure(message) {
      this.controller.markFailed(message);
    }
    buildMediaBlock(url) {
      const block = document.createElement("div");
      block.className = "media-block";
      const audio = document.createElement("audio");
      audio.controls = true;
      audio.preload = "metadata";
      audio.src = url;
      audio.addEventListener("error", () => {
        this.notifyMediaFailure(`media failed to load: ${url}`);
      });
      audio.addEventListener("timeupdate", () => {
        this.state = setMediaPosition(this.state, audio.currentTime);
        this.renderTimelineOnly();
      });
      block.appendChild(audio);
      this.attachMedia(audio);
      return block;
    }
    buildControls() {
      const controls = document.createElement("div");
      controls.className = "controls";
      const segLabel = document.createElement("label");
      segLabel.textContent = "Segment ";
      const select = document.createElement("select");
      select.className = "segment-select";
      for (const label of SEGMENT_LABELS) {
        const option = document.createElement("option");
        option.value = label;
        option.textContent = label;
        select.appendChild(option);
      }
      select.value = this.state.segment;
      select.addEventListener("change", () => {
        this.state = selectSegment(this.state, select.value);
        this.renderDynamic();
      });
      segLabel.appendChild(select);
      controls.appendChild(segLabel);
      const uttLabel = document.createElement("label");
      const checkbox = document.createElement("input");
      checkbox.type = "checkbox";
      checkbox.className = "utterance-toggle";
      checkbox.checked = this.state.showUtterances;
      checkbox.addEventListener("change", () => {
        this.state = toggleUtterances(this.state);
        this.renderTimelineOnly();
      });
      uttLabel.appendChild(checkbox);
      uttLabel.appendChild(document.createTextNode(" show utterances"));
      controls.appendChild(uttLabel);
      return controls;
    }
    renderTimelineOnly() {
      if (this.timelineEl) {
        renderTimeline(this.timelineEl, this.state, {
          onBarClick: this.onBarClick,
          onSpeakerClick: this.onSpeakerClick
        });
      }
    }
    renderTranscriptOnly() {
      if (this.transcriptEl) {
        renderTranscript(this.transcriptEl, this.state);
      }
    }
    renderDynamic() {
      this.renderTimelineOnly();
      this.renderTranscriptOnly();
      if (this.chordEl) {
        renderChord(this.chordEl, this.state);
      }
      if (this.volatilityEl) {
        renderVolatilityPanel(this.volatilityEl, this.state);
      }
      if (this.participationEl) {
        renderParticipation(this.participationEl, this.state);
      }
    }
    showNotice(message) {
      if (!this.noticesEl) {
        return;
      }
      const notice = document.createElement("div");
      notice.className = "notice";
      const text = document.createElement("span");
      text.textContent = message;
      notice.appendChild(text);
      const dismiss = document.createElement("button");
      dismiss.type = "button";
      dismiss.textContent = "dismiss";
      dismiss.addEventListener("click", () => notice.remove());
      notice.appendChild(dismiss);
      this.noticesEl.appendChild(notice);
    }
  };

  // src/main.ts
  function boot(doc = document) {
    const holder = doc.getElementById("report-data");
    const app = doc.getElementById("app");
    if (!holder || !app) {
      return null;
    }
    let report;
    try {
      report = parseReport(holder.textContent ?? "");
    } catch (err) {
      app.textContent = `failed to load the embedded report: ${String(err)}`;
      return null;
    }
    const page = new ReviewPage(app, report);
    page.mount();
    return page;
  }
  if (typeof document !== "undefined") {
    boot();
  }
})();
