/**
 * Client-rendered countdown, re-synced from the server's remaining
 * seconds on every autosave response. The displayed value can only move
 * DOWN on sync: the server is the sole time authority, so the countdown
 * never exceeds the last server-reported remaining time. When it hits
 * zero the onZero callback fires exactly once (the exam page uses it to
 * auto-submit).
 */

export interface CountdownHooks {
  onTick: (remainingSeconds: number) => void;
  onZero: () => void;
}

const TICK_MS = 250;

export class Countdown {
  private zeroAtMs = 0;
  private timer: ReturnType<typeof setInterval> | null = null;
  private fired = false;

  constructor(
    private hooks: CountdownHooks,
    private nowMs: () => number = () => Date.now(),
  ) {}

  start(remainingSeconds: number): void {
    this.zeroAtMs = this.nowMs() + remainingSeconds * 1000;
    this.fired = false;
    this.stopTimer();
    this.timer = setInterval(() => this.tick(), TICK_MS);
    this.tick();
  }

  /** Fold in a fresh server-reported remaining time; only ever shortens. */
  sync(remainingSeconds: number): void {
    const candidate = this.nowMs() + remainingSeconds * 1000;
    if (candidate < this.zeroAtMs) this.zeroAtMs = candidate;
    this.tick();
  }

  remaining(): number {
    // ceil: the clock reads 0 only once the deadline has actually arrived,
    // so onZero cannot fire a second early.
    return Math.max(0, Math.ceil((this.zeroAtMs - this.nowMs()) / 1000));
  }

  private tick(): void {
    const left = this.remaining();
    this.hooks.onTick(left);
    if (left <= 0 && !this.fired) {
      this.fired = true;
      this.stopTimer();
      this.hooks.onZero();
    }
  }

  stop(): void {
    this.stopTimer();
    this.fired = true;
  }

  private stopTimer(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }
}

export function formatClock(totalSeconds: number): string {
  const h = Math.floor(totalSeconds / 3600);
  const m = Math.floor((totalSeconds % 3600) / 60);
  const s = totalSeconds % 60;
  const mm = String(m).padStart(2, "0");
  const ss = String(s).padStart(2, "0");
  return h > 0 ? `${h}:${mm}:${ss}` : `${m}:${ss}`;
}
