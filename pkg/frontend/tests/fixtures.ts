/** Canned server payloads mirroring the live API's shapes. */
import type { AttemptView, ResultView } from "../src/api.js";

export function attemptViewFixture(overrides: Partial<AttemptView> = {}): AttemptView {
  return {
    attempt_id: "atmp-0001",
    exam_id: "exam-0001",
    exam_name: "Crime Detection and Investigation for BSCRIM",
    instructions: "Choose the single best answer.",
    attempt_no: 1,
    started_at: "2018-11-25T21:01:30+00:00",
    deadline: "2018-11-25T22:01:30+00:00",
    remaining_seconds: 3600,
    grace_seconds: 30,
    total_questions: 3,
    questions: [
      {
        question_id: "q-a",
        position: 1,
        stem: "First item?",
        choices: ["red", "green", "blue", "cyan"],
        choice_order: [2, 0, 3, 1],
      },
      {
        question_id: "q-b",
        position: 2,
        stem: "Second item?",
        choices: ["yes", "no"],
        choice_order: [1, 0],
      },
      {
        question_id: "q-c",
        position: 3,
        stem: "Third item?",
        choices: ["i", "ii", "iii"],
        choice_order: [0, 1, 2],
      },
    ],
    saved_answers: {},
    resumed: false,
    ...overrides,
  };
}

export function resultViewFixture(overrides: Partial<ResultView> = {}): ResultView {
  return {
    attempt_id: "atmp-0001",
    exam_id: "exam-0001",
    exam_name: "Crime Detection and Investigation for BSCRIM",
    attempt_no: 1,
    raw_score: 9,
    total_questions: 10,
    weight: "15",
    passing_rate: "75",
    weighted_points: "13.5",
    weighted_display: "13.5 of 15%",
    outcome: "Passed",
    started_at: "2018-11-25T21:01:30+00:00",
    submitted_at: "2018-11-25T21:11:30+00:00",
    ...overrides,
  };
}
