/**
 * Exam-taking session state.
 *
 * Holds the server's attempt view (display-ordered cards plus the
 * authored<->display choice permutation) and the examinee's selections.
 * Selections live as AUTHORED indices; the permutation is applied when a
 * display position is clicked and inverted when restoring saved answers.
 * Every selection immediately queues an autosave; at most one save is in
 * flight per question, and a later click supersedes a pending one. The
 * session never sees or stores a correct-answer index — the server does
 * not send one before finalization.
 */
import type { AnswerAck, AttemptQuestion, AttemptView } from "./api.js";

export type SessionState = "in_progress" | "submitting" | "submitted" | "expired";

export interface SessionHooks {
  /** Persist one answer (authored index); resolves with the server ack. */
  save: (questionId: string, authoredChoice: number) => Promise<AnswerAck>;
  /** Called with the server's remaining seconds after each ack. */
  onServerSync?: (remainingSeconds: number) => void;
  /** Called when a save is refused because the attempt expired. */
  onExpired?: () => void;
  /** Called after any state change the view should repaint for. */
  onChange?: () => void;
}

interface QuestionSaveState {
  inFlight: boolean;
  resendQueued: boolean;
  lastError: string | null;
}

export class ExamSession {
  readonly attemptId: string;
  readonly examId: string;
  readonly examName: string;
  readonly instructions: string;
  readonly questions: AttemptQuestion[];
  state: SessionState = "in_progress";

  private selections = new Map<string, number>();
  private saveStates = new Map<string, QuestionSaveState>();

  constructor(view: AttemptView, private hooks: SessionHooks) {
    this.attemptId = view.attempt_id;
    this.examId = view.exam_id;
    this.examName = view.exam_name;
    this.instructions = view.instructions;
    this.questions = view.questions;
    for (const [questionId, authored] of Object.entries(view.saved_answers)) {
      this.selections.set(questionId, authored);
    }
  }

  question(questionId: string): AttemptQuestion {
    const card = this.questions.find((q) => q.question_id === questionId);
    if (!card) throw new Error(`no question ${questionId} in this attempt`);
    return card;
  }

  /** Authored index currently selected, or null. */
  selectedAuthored(questionId: string): number | null {
    return this.selections.get(questionId) ?? null;
  }

  /** Display position currently selected, or null (for rendering). */
  selectedDisplay(questionId: string): number | null {
    const authored = this.selections.get(questionId);
    if (authored === undefined) return null;
    const display = this.question(questionId).choice_order.indexOf(authored);
    return display >= 0 ? display : null;
  }

  answeredCount(): number {
    return this.selections.size;
  }

  saveError(questionId: string): string | null {
    return this.saveStates.get(questionId)?.lastError ?? null;
  }

  /** Record a click on a display position and autosave the authored index. */
  select(questionId: string, displayIndex: number): void {
    if (this.state !== "in_progress") return;
    const card = this.question(questionId);
    const authored = card.choice_order[displayIndex];
    if (authored === undefined) throw new Error(`display index ${displayIndex} out of range`);
    this.selections.set(questionId, authored);
    this.queueSave(questionId);
    this.hooks.onChange?.();
  }

  private saveState(questionId: string): QuestionSaveState {
    let state = this.saveStates.get(questionId);
    if (!state) {
      state = { inFlight: false, resendQueued: false, lastError: null };
      this.saveStates.set(questionId, state);
    }
    return state;
  }

  private queueSave(questionId: string): void {
    const state = this.saveState(questionId);
    if (state.inFlight) {
      state.resendQueued = true; // the newer selection wins once the wire clears
      return;
    }
    void this.pushSave(questionId);
  }

  private async pushSave(questionId: string): Promise<void> {
    const state = this.saveState(questionId);
    const authored = this.selections.get(questionId);
    if (authored === undefined) return;
    state.inFlight = true;
    state.lastError = null;
    try {
      const ack = await this.hooks.save(questionId, authored);
      this.hooks.onServerSync?.(ack.remaining_seconds);
    } catch (error) {
      if (isExpiredError(error)) {
        this.state = "expired";
        this.hooks.onExpired?.();
        this.hooks.onChange?.();
        return;
      }
      state.lastError = error instanceof Error ? error.message : String(error);
    } finally {
      state.inFlight = false;
    }
    if (state.resendQueued && this.state === "in_progress") {
      state.resendQueued = false;
      void this.pushSave(questionId);
    }
    this.hooks.onChange?.();
  }

  markSubmitting(): void {
    if (this.state === "in_progress") this.state = "submitting";
  }

  markSubmitted(): void {
    this.state = "submitted";
  }
}

function isExpiredError(error: unknown): boolean {
  return (
    typeof error === "object" &&
    error !== null &&
    "code" in error &&
    (error as { code: unknown }).code === "EXPIRED"
  );
}
