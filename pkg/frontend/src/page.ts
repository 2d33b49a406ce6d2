/** Page orchestration: builds the static scaffold, owns the view state, and
 * re-renders the dynamic sections when the state changes.
 */

import { MediaController, SeekableMedia } from "./media";
import {
  renderChord,
  renderHeader,
  renderParticipation,
  renderTimeline,
  renderTranscript,
  renderVolatilityPanel,
} from "./render";
import {
  ViewState,
  createViewState,
  highlightSpeaker,
  selectSegment,
  selectTurn,
  setMediaPosition,
  toggleUtterances,
} from "./state";
import { MeetingReport, SEGMENT_LABELS, TurnDoc } from "./types";

function section(className: string, heading?: string): HTMLElement {
  const node = document.createElement("section");
  node.className = className;
  if (heading) {
    const h2 = document.createElement("h2");
    h2.textContent = heading;
    node.appendChild(h2);
  }
  return node;
}

export class ReviewPage {
  private state: ViewState;
  private readonly controller: MediaController;
  private readonly root: HTMLElement;
  private noticesEl: HTMLElement | null = null;
  private timelineEl: HTMLElement | null = null;
  private transcriptEl: HTMLElement | null = null;
  private chordEl: HTMLElement | null = null;
  private volatilityEl: HTMLElement | null = null;
  private participationEl: HTMLElement | null = null;

  constructor(root: HTMLElement, report: MeetingReport) {
    this.root = root;
    this.state = createViewState(report);
    this.controller = new MediaController((msg) => this.showNotice(msg));
  }

  /** Current view state, exposed for tests and debugging. */
  getState(): ViewState {
    return this.state;
  }

  mount(): void {
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
  attachMedia(media: SeekableMedia): void {
    this.controller.attach(media);
  }

  /** Report a media load failure. Playback is disabled, everything else on
   * the page keeps working. */
  notifyMediaFailure(message: string): void {
    this.controller.markFailed(message);
  }

  private buildMediaBlock(url: string): HTMLElement {
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

  private buildControls(): HTMLElement {
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

  private onBarClick = (turn: TurnDoc, startS: number): void => {
    this.state = selectTurn(this.state, turn);
    const sought = this.controller.seekTo(startS);
    if (sought) {
      this.state = setMediaPosition(this.state, startS);
    }
    this.renderTimelineOnly();
    this.renderTranscriptOnly();
  };

  private onSpeakerClick = (speaker: string): void => {
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

  private renderTimelineOnly(): void {
    if (this.timelineEl) {
      renderTimeline(this.timelineEl, this.state, {
        onBarClick: this.onBarClick,
        onSpeakerClick: this.onSpeakerClick,
      });
    }
  }

  private renderTranscriptOnly(): void {
    if (this.transcriptEl) {
      renderTranscript(this.transcriptEl, this.state);
    }
  }

  private renderDynamic(): void {
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

  private showNotice(message: string): void {
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
}
