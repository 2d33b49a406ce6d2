"""Self-contained HTML review pages.

The page embeds the full report document as JSON plus whatever viewer
bundle is shipped in the package assets. Everything is inlined: a report
page must open from a file:// URL with no network access. When the
compiled viewer bundle is absent the page falls back to a small built-in
renderer so the HTML output always works.
"""

import html
import json
from importlib import resources
from typing import Any, Optional

from .report import MeetingReport, report_to_doc, dumps_canonical

VIEWER_JS_ASSET = "viewer.js"
VIEWER_CSS_ASSET = "viewer.css"


def _load_asset(name: str) -> Optional[str]:
    try:
        ref = resources.files("talkmeter").joinpath("assets").joinpath(name)
        if ref.is_file():
            return ref.read_text(encoding="utf-8")
    except (FileNotFoundError, ModuleNotFoundError, NotADirectoryError):
        pass
    return None


def _embed_json(doc: Any) -> str:
    # "</" must not appear verbatim inside a script element.
    return dumps_canonical(doc).replace("</", "<\\/")


_BASE_CSS = """\
:root { --ink: #1c2430; --paper: #f7f8fa; --card: #ffffff; --line: #d8dee6;
  --accent: #2563eb; --muted: #5b6676; }
* { box-sizing: border-box; }
body { margin: 0; background: var(--paper); color: var(--ink);
  font: 15px/1.5 system-ui, -apple-system, "Segoe UI", sans-serif; }
main { max-width: 1100px; margin: 0 auto; padding: 24px 20px 60px; }
h1 { font-size: 22px; margin: 0 0 4px; }
h2 { font-size: 16px; margin: 28px 0 8px; }
.sub { color: var(--muted); margin: 0 0 16px; }
.chips { display: flex; flex-wrap: wrap; gap: 8px; margin: 12px 0; }
.chip { background: var(--card); border: 1px solid var(--line);
  border-radius: 999px; padding: 3px 12px; font-size: 13px; }
table { border-collapse: collapse; width: 100%; background: var(--card);
  border: 1px solid var(--line); font-size: 13.5px; }
th, td { text-align: left; padding: 6px 10px; border-top: 1px solid var(--line); }
thead th { border-top: none; background: #eef1f5; font-weight: 600; }
td.num, th.num { text-align: right; font-variant-numeric: tabular-nums; }
.timeline { position: relative; background: var(--card);
  border: 1px solid var(--line); margin: 8px 0; overflow: hidden; }
.lane { position: relative; height: 26px; border-top: 1px solid var(--line); }
.lane:first-child { border-top: none; }
.lane-label { position: absolute; left: 6px; top: 3px; font-size: 12px;
  color: var(--muted); pointer-events: none; z-index: 2; }
.turn { position: absolute; top: 4px; height: 18px; border-radius: 3px;
  opacity: 0.85; cursor: pointer; }
.turn:hover { opacity: 1; outline: 1px solid var(--ink); }
.splitline { position: absolute; top: 0; bottom: 0; width: 2px;
  background: #c2410c; z-index: 3; }
.utt { padding: 4px 10px; border-top: 1px solid var(--line); }
.utt .who { color: var(--accent); font-weight: 600; margin-right: 6px; }
.utt .when { color: var(--muted); font-size: 12px; margin-right: 6px; }
#transcript { background: var(--card); border: 1px solid var(--line);
  max-height: 360px; overflow-y: auto; }
audio { width: 100%; margin: 10px 0; }
.undef { color: var(--muted); font-style: italic; }
"""

_FALLBACK_JS = """\
(function () {
  "use strict";
  var doc = JSON.parse(document.getElementById("report-data").textContent);
  var app = document.getElementById("app");
  var PALETTE = ["#2563eb", "#dc2626", "#059669", "#d97706", "#7c3aed",
                 "#0891b2", "#be185d", "#4d7c0f", "#9333ea", "#b45309"];

  function el(tag, attrs, children) {
    var node = document.createElement(tag);
    Object.keys(attrs || {}).forEach(function (k) {
      if (k === "text") { node.textContent = attrs[k]; }
      else { node.setAttribute(k, attrs[k]); }
    });
    (children || []).forEach(function (c) { node.appendChild(c); });
    return node;
  }
  function fmt(x, digits) {
    return x === null || x === undefined ? "—" : x.toFixed(digits === undefined ? 3 : digits);
  }
  function clock(s) {
    var h = Math.floor(s / 3600), m = Math.floor((s % 3600) / 60), sec = Math.floor(s % 60);
    var mm = (m < 10 ? "0" : "") + m, ss = (sec < 10 ? "0" : "") + sec;
    return (h > 0 ? h + ":" + mm : m + "") + ":" + ss;
  }
  var color = {};
  doc.speakers.forEach(function (s, i) { color[s] = PALETTE[i % PALETTE.length]; });

  var whole = doc.segments.WHOLE;
  var main = el("main");
  main.appendChild(el("h1", { text: "Meeting " + doc.meeting.meeting_id }));
  main.appendChild(el("p", {
    "class": "sub",
    text: "group " + doc.meeting.group_id + " · week " + doc.meeting.week_index
  }));

  var chips = el("div", { "class": "chips" });
  [["span", clock(whole.span_start_s) + " – " + clock(whole.span_end_s)],
   ["split", clock(doc.split_s)],
   ["turns", String(whole.turn_count)],
   ["utterances", String(doc.utterances.length)],
   ["dropped cues", String(doc.diagnostics.dropped_cue_count)]
  ].forEach(function (pair) {
    chips.appendChild(el("span", { "class": "chip", text: pair[0] + ": " + pair[1] }));
  });
  main.appendChild(chips);

  var audio = null;
  if (doc.media_url) {
    audio = el("audio", { controls: "", src: doc.media_url });
    main.appendChild(audio);
  }

  main.appendChild(el("h2", { text: "Timeline" }));
  var t0 = whole.span_start_s, t1 = whole.span_end_s;
  var spanS = Math.max(t1 - t0, 1e-9);
  var timeline = el("div", { "class": "timeline" });
  doc.speakers.forEach(function (speaker) {
    var lane = el("div", { "class": "lane" });
    lane.appendChild(el("span", { "class": "lane-label", text: speaker }));
    whole.turns.forEach(function (turn) {
      if (turn.speaker !== speaker) { return; }
      var left = ((turn.start_s - t0) / spanS) * 100;
      var width = Math.max(((turn.end_s - turn.start_s) / spanS) * 100, 0.15);
      var bar = el("div", {
        "class": "turn",
        style: "left:" + left + "%;width:" + width + "%;background:" + color[speaker],
        title: speaker + " " + clock(turn.start_s) + " (" + fmt(turn.duration_s, 1) + "s)"
      });
      bar.addEventListener("click", function () {
        if (audio) { audio.currentTime = turn.start_s; audio.play(); }
      });
      lane.appendChild(bar);
    });
    timeline.appendChild(lane);
  });
  timeline.appendChild(el("div", {
    "class": "splitline",
    style: "left:" + (((doc.split_s - t0) / spanS) * 100) + "%",
    title: "half split"
  }));
  main.appendChild(timeline);

  main.appendChild(el("h2", { text: "Volatility" }));
  var vt = el("table");
  vt.appendChild(el("thead", {}, [el("tr", {}, [
    el("th", { text: "segment" }), el("th", { text: "scope" }),
    el("th", { "class": "num", text: "n" }),
    el("th", { "class": "num", text: "raw sigma" }),
    el("th", { "class": "num", text: "volatility" })
  ])]));
  var vbody = el("tbody");
  ["WHOLE", "FIRST_HALF", "SECOND_HALF"].forEach(function (label) {
    var seg = doc.segments[label];
    function row(scope, v) {
      var cells = [
        el("td", { text: label }), el("td", { text: scope }),
        el("td", { "class": "num", text: String(v.n_points) }),
        el("td", { "class": "num", text: fmt(v.raw_sigma, 6) }),
        v.defined
          ? el("td", { "class": "num", text: fmt(v.volatility, 6) })
          : el("td", { "class": "num undef", text: "undefined" })
      ];
      vbody.appendChild(el("tr", {}, cells));
    }
    row(seg.language !== "unknown" ? "group (" + seg.language + ")" : "group", seg.volatility);
    seg.per_participant_volatility.forEach(function (p) { row(p.speaker, p); });
  });
  vt.appendChild(vbody);
  main.appendChild(vt);

  main.appendChild(el("h2", { text: "Participation (whole meeting)" }));
  var pt = el("table");
  pt.appendChild(el("thead", {}, [el("tr", {}, [
    el("th", { text: "speaker" }),
    el("th", { "class": "num", text: "speaking time (s)" }),
    el("th", { "class": "num", text: "share %" }),
    el("th", { "class": "num", text: "turns" })
  ])]));
  var pbody = el("tbody");
  whole.participation.forEach(function (r) {
    pbody.appendChild(el("tr", {}, [
      el("td", { text: r.speaker }),
      el("td", { "class": "num", text: fmt(r.speaking_time_s, 1) }),
      el("td", { "class": "num", text: fmt(r.participation_pct, 1) }),
      el("td", { "class": "num", text: String(r.turn_count) })
    ]));
  });
  pt.appendChild(pbody);
  main.appendChild(pt);

  main.appendChild(el("h2", { text: "Transcript" }));
  var list = el("div", { id: "transcript" });
  doc.utterances.forEach(function (u) {
    var item = el("div", { "class": "utt" });
    item.appendChild(el("span", { "class": "when", text: clock(u.start_s) }));
    item.appendChild(el("span", { "class": "who", text: u.speaker }));
    item.appendChild(document.createTextNode(u.text));
    item.addEventListener("click", function () {
      if (audio) { audio.currentTime = u.start_s; audio.play(); }
    });
    list.appendChild(item);
  });
  main.appendChild(list);

  app.textContent = "";
  app.appendChild(main);
})();
"""


def render_html(report: MeetingReport) -> str:
    """Render a report to a standalone review page."""
    return render_html_doc(report_to_doc(report))


def render_html_doc(doc: dict[str, Any]) -> str:
    meeting_id = str(doc.get("meeting", {}).get("meeting_id", "report"))
    css = _load_asset(VIEWER_CSS_ASSET) or _BASE_CSS
    js = _load_asset(VIEWER_JS_ASSET) or _FALLBACK_JS
    title = html.escape(f"talkmeter · {meeting_id}")
    return (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n'
        "<head>\n"
        '<meta charset="utf-8">\n'
        '<meta name="viewport" content="width=device-width, initial-scale=1">\n'
        f"<title>{title}</title>\n"
        f"<style>\n{css}</style>\n"
        "</head>\n"
        "<body>\n"
        '<div id="app"><noscript>This review page needs JavaScript.</noscript></div>\n'
        f'<script id="report-data" type="application/json">\n{_embed_json(doc)}</script>\n'
        f"<script>\n{js}</script>\n"
        "</body>\n"
        "</html>\n"
    )
