/** Playback control for the review page.
 *
 * The controller drives anything matching SeekableMedia, the small subset of
 * HTMLMediaElement the page actually needs. The page hands it the real
 * <audio> element; tests hand it a fake. Seeking on real media elements is
 * asynchronous, so seekTo reports completion through a callback: when the
 * media exposes a "seeked" event the callback fires on that event, otherwise
 * on the next microtask.
 */

export interface SeekableMedia {
  currentTime: number;
  paused: boolean;
  play(): Promise<void> | void;
  addEventListener?(type: string, listener: () => void, options?: { once?: boolean }): void;
}

export type MediaNotice = (message: string) => void;

export class MediaController {
  private media: SeekableMedia | null = null;
  private failed = false;
  private readonly notice: MediaNotice;

  constructor(notice: MediaNotice = () => {}) {
    this.notice = notice;
  }

  attach(media: SeekableMedia): void {
    this.media = media;
    this.failed = false;
  }

  detach(): void {
    this.media = null;
  }

  /** Record that the media source failed to load. Playback is disabled but
   * the rest of the page keeps working; the user just gets a notice. */
  markFailed(message: string): void {
    if (!this.failed) {
      this.failed = true;
      this.notice(message);
    }
  }

  get available(): boolean {
    return this.media !== null && !this.failed;
  }

  /** Seek to the given position and start playback. Returns true when a seek
   * was issued, false when no usable media is attached. Playback that is
   * already running keeps running; only the position jumps. */
  seekTo(seconds: number, onDone?: () => void): boolean {
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
}
