// @vitest-environment jsdom
/**
 * Exam page end-to-end over a mocked wire: countdown auto-submit and
 * answer-key secrecy, driven through the real view + api client code.
 */
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, MemoryStorage } from "../src/api.js";
import { examView, ViewContext } from "../src/views/examinee.js";
import { attemptViewFixture, resultViewFixture } from "./fixtures.js";

interface WireRecord {
  url: string;
  method: string;
  body: string | null;
  at: number;
}

function buildHarness(remainingSeconds: number) {
  const wire: WireRecord[] = [];
  const view = attemptViewFixture({ remaining_seconds: remainingSeconds });
  const result = resultViewFixture();
  const fetchFn = async (url: string, init?: RequestInit): Promise<Response> => {
    wire.push({
      url,
      method: init?.method ?? "GET",
      body: typeof init?.body === "string" ? init.body : null,
      at: Date.now(),
    });
    const respond = (body: unknown, status = 200) =>
      new Response(JSON.stringify(body), { status });
    if (url.endsWith("/attempts") && init?.method === "POST") return respond(view);
    if (url.includes("/answers/")) {
      const questionId = url.split("/answers/")[1]!;
      const { choice } = JSON.parse(String(init?.body));
      return respond({
        attempt_id: view.attempt_id,
        question_id: questionId,
        choice,
        remaining_seconds: Math.max(0, remainingSeconds - 1),
      });
    }
    if (url.endsWith("/submit")) return respond(result);
    if (url.endsWith("/result")) return respond(result);
    throw new Error(`unexpected request ${url}`);
  };
  const storage = new MemoryStorage();
  storage.setItem("mockboard.token", "tok-test");
  storage.setItem("mockboard.role", "Examinee");
  const api = new ApiClient("/mockboard/api", fetchFn, storage);
  document.body.innerHTML = '<div id="app"></div>';
  const ctx: ViewContext = {
    api,
    navigate: () => {},
    root: document.getElementById("app") as HTMLElement,
  };
  return { ctx, wire, view, result, storage };
}

describe("exam page", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
    document.body.innerHTML = "";
  });

  it("auto-submits within 2s of countdown zero and renders the result verbatim", async () => {
    const { ctx, wire, result } = buildHarness(10); // 10-second desk-scale exam
    await examView(ctx, "exam-0001");
    const zeroAt = Date.now() + 10_000;
    await vi.advanceTimersByTimeAsync(13_000);
    const submit = wire.find((r) => r.url.endsWith("/submit"));
    expect(submit, "submit request must fire at countdown zero").toBeDefined();
    expect(submit!.at - zeroAt).toBeGreaterThanOrEqual(0);
    expect(submit!.at - zeroAt).toBeLessThanOrEqual(2_000);
    const html = document.body.innerHTML;
    expect(html).toContain(result.weighted_display); // "13.5 of 15%" as the API said
    expect(html).toContain(`${result.raw_score} of ${result.total_questions}`);
    expect(html).toContain(result.outcome);
  });

  it("renders all questions in display order and saves clicks as authored indices", async () => {
    const { ctx, wire, view } = buildHarness(600);
    await examView(ctx, "exam-0001");
    const cards = document.querySelectorAll(".question");
    expect(cards).toHaveLength(view.questions.length);
    // Click display position 0 on q-a (choice_order [2,0,3,1] -> authored 2).
    const radio = document.querySelector<HTMLInputElement>('#card-q-a input[value="0"]');
    radio!.click();
    await vi.advanceTimersByTimeAsync(10);
    const save = wire.find((r) => r.url.includes("/answers/q-a"));
    expect(save).toBeDefined();
    expect(JSON.parse(save!.body!)).toEqual({ choice: 2 });
  });

  it("restores saved selections on resume through the permutation", async () => {
    const { ctx } = (() => {
      const built = buildHarness(600);
      built.view.saved_answers = { "q-a": 3 }; // authored 3 -> display 2
      built.view.resumed = true;
      return built;
    })();
    await examView(ctx, "exam-0001");
    const checked = document.querySelector<HTMLInputElement>("#card-q-a input:checked");
    expect(checked?.value).toBe("2");
  });

  it("exposes no correct-answer index anywhere the client can see mid-attempt", async () => {
    const { ctx, wire, storage } = buildHarness(600);
    await examView(ctx, "exam-0001");
    document.querySelector<HTMLInputElement>('#card-q-b input[value="1"]')!.click();
    await vi.advanceTimersByTimeAsync(10);
    // Client-visible surfaces: the DOM, the web storage, every outbound
    // request body, and every inbound payload recorded by the harness.
    const surfaces = [
      document.body.innerHTML,
      JSON.stringify(["mockboard.token", "mockboard.role"].map((k) => storage.getItem(k))),
      JSON.stringify(wire),
    ].join("\n");
    expect(surfaces).not.toMatch(/correct/i);
  });
});
