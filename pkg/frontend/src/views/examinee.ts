/**
 * Examinee views: login, registration, dashboard, exam page (countdown +
 * autosave + auto-submit), result, certificate print view.
 */
import { ApiClient, ApiError, Certificate, Dashboard, ResultView } from "../api.js";
import { Countdown, formatClock } from "../countdown.js";
import { banner, clearFieldErrors, esc, on, qs, qsa, showFieldErrors } from "../dom.js";
import { ExamSession } from "../session.js";

export interface ViewContext {
  api: ApiClient;
  navigate: (hash: string) => void;
  root: HTMLElement;
}

// -- login / register -----------------------------------------------------

export function loginView(ctx: ViewContext): void {
  ctx.root.innerHTML = `
  <div class="card narrow">
    <h1>Mock Board Examination</h1>
    <form id="login-form">
      <label>Username <input name="username" required autofocus></label>
      <label>Password <input name="password" type="password" required></label>
      <div class="field-error" data-error-for="credentials"></div>
      <button type="submit">Log in</button>
    </form>
    <p>Don't have an account yet? <a href="#/register">Register here</a></p>
  </div>`;
  qs<HTMLFormElement>(ctx.root, "#login-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    clearFieldErrors(ctx.root);
    const data = new FormData(ev.target as HTMLFormElement);
    try {
      const res = await ctx.api.login(String(data.get("username")), String(data.get("password")));
      ctx.navigate(res.role === "Admin" ? "#/admin" : "#/dashboard");
    } catch (error) {
      if (error instanceof ApiError && error.code === "AWAITING_VERIFICATION") {
        ctx.navigate("#/pending");
        return;
      }
      const slot = ctx.root.querySelector('[data-error-for="credentials"]');
      if (slot) slot.textContent = error instanceof Error ? error.message : String(error);
    }
  });
}

export function pendingView(ctx: ViewContext): void {
  ctx.root.innerHTML = `
  <div class="card narrow">
    <h1>Registration received</h1>
    <p>Your account is awaiting approval. An administrator must verify all
    examinees before they can log in — please check back later or ask the
    examination office.</p>
    <p><a href="#/login">Back to login</a></p>
  </div>`;
}

export async function registerView(ctx: ViewContext): Promise<void> {
  const { courses } = await ctx.api.courses();
  const courseOptions = courses
    .map((c) => `<option value="${esc(c.course_id)}">${esc(c.name)}</option>`)
    .join("");
  ctx.root.innerHTML = `
  <div class="card narrow">
    <h1>Registration Form</h1>
    <form id="register-form">
      <label>Username * <input name="username" required></label>
      <div class="field-error" data-error-for="username"></div>
      <label>Student Number * <input name="student_number" placeholder="Format: YYYY-XXXX" required></label>
      <div class="field-error" data-error-for="student_number"></div>
      <label>Lastname * <input name="last_name" required></label>
      <div class="field-error" data-error-for="last_name"></div>
      <label>Firstname * <input name="first_name" required></label>
      <div class="field-error" data-error-for="first_name"></div>
      <label>Middlename * <input name="middle_name" required></label>
      <div class="field-error" data-error-for="middle_name"></div>
      <label>Address * <input name="address" required></label>
      <div class="field-error" data-error-for="address"></div>
      <label>Password * <input name="password" type="password" required></label>
      <div class="field-error" data-error-for="password"></div>
      <label>Contact Number * <input name="contact_number" required></label>
      <div class="field-error" data-error-for="contact_number"></div>
      <label>Birthdate * <input name="birthdate" type="date" required></label>
      <div class="field-error" data-error-for="birthdate"></div>
      <label>Select Course
        <select name="course_id" id="course-select" required>${courseOptions}</select>
      </label>
      <div class="field-error" data-error-for="course_id"></div>
      <label>Select a major
        <select name="major_id" id="major-select"><option value="">Not Applicable!</option></select>
      </label>
      <div class="field-error" data-error-for="major_id"></div>
      <label class="inline"><input name="terms_accepted" type="checkbox"> Agree of Terms and Condition</label>
      <div class="field-error" data-error-for="terms_accepted"></div>
      <button type="submit">Register</button>
    </form>
    <p><a href="#/login">Back to login</a></p>
  </div>`;

  const majorSelect = qs<HTMLSelectElement>(ctx.root, "#major-select");
  const courseSelect = qs<HTMLSelectElement>(ctx.root, "#course-select");
  const refreshMajors = () => {
    const course = courses.find((c) => c.course_id === courseSelect.value);
    const majors = course?.majors ?? [];
    majorSelect.innerHTML = majors.length
      ? majors.map((m) => `<option value="${esc(m.major_id)}">${esc(m.name)}</option>`).join("")
      : `<option value="">Not Applicable!</option>`;
  };
  courseSelect.addEventListener("change", refreshMajors);
  refreshMajors();

  qs<HTMLFormElement>(ctx.root, "#register-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    clearFieldErrors(ctx.root);
    const form = ev.target as HTMLFormElement;
    const data = new FormData(form);
    try {
      await ctx.api.register({
        username: String(data.get("username")),
        password: String(data.get("password")),
        student_number: String(data.get("student_number")),
        last_name: String(data.get("last_name")),
        first_name: String(data.get("first_name")),
        middle_name: String(data.get("middle_name")),
        address: String(data.get("address")),
        contact_number: String(data.get("contact_number")),
        birthdate: String(data.get("birthdate")),
        course_id: String(data.get("course_id")),
        major_id: majorSelect.value || null,
        terms_accepted: data.get("terms_accepted") === "on",
      });
      ctx.navigate("#/pending");
    } catch (error) {
      if (error instanceof ApiError) showFieldErrors(ctx.root, error.fields);
    }
  });
}

// -- dashboard ----------------------------------------------------------------

const STATUS_LABEL: Record<string, string> = {
  Locked: "LOCKED",
  TakeExam: "TAKE EXAM",
  Retake: "RETAKE",
  ViewCertificate: "VIEW CERTIFICATE",
};

export async function dashboardView(ctx: ViewContext): Promise<void> {
  const data: Dashboard = await ctx.api.dashboard();
  const rows = data.exams
    .map((exam, index) => {
      const clickable = exam.status === "TakeExam" || exam.status === "Retake";
      const action = clickable
        ? `<button class="take" data-exam="${esc(exam.exam_id)}">${STATUS_LABEL[exam.status]}</button>`
        : exam.status === "ViewCertificate"
          ? `<a class="button" href="#/certificate">VIEW CERTIFICATE</a>`
          : `<span class="muted">LOCKED</span>`;
      return `<tr>
        <td>${index + 1}</td>
        <td>${esc(exam.name)}</td>
        <td>${formatClock(exam.duration_minutes * 60)}</td>
        <td>${esc(exam.passing_rate)}%</td>
        <td>${esc(exam.exam_date)}</td>
        <td>${exam.total_questions}</td>
        <td>${action}</td>
      </tr>`;
    })
    .join("");
  const notes = data.announcements
    .map(
      (a) => `<div class="note"><strong>NOTICE:</strong> ${esc(a.body)}
        <div class="muted">Created by: ${esc(a.author)}, ${new Date(a.created_at).toLocaleString()}</div></div>`,
    )
    .join("");
  ctx.root.innerHTML = `
  <header class="bar">
    <span>Examinee Dashboard</span>
    <button id="logout">Log out</button>
  </header>
  <div class="columns">
    <div class="card grow">
      <h2>Examinations</h2>
      <table>
        <thead><tr><th>#</th><th>Exam Name</th><th>Time Limit</th><th>Passing Rate</th>
        <th>Examination Date</th><th>Total Questions</th><th>Status</th></tr></thead>
        <tbody>${rows || `<tr><td colspan="7" class="muted">No examinations scheduled for your program.</td></tr>`}</tbody>
      </table>
    </div>
    <div class="card side">
      <h2>Details</h2>
      <p><strong>${esc(data.profile.name)}</strong><br>
      ${esc(data.profile.student_number)}<br>
      Course: ${esc(data.profile.course_name)}<br>
      Major: ${esc(data.profile.major_name ?? "N/A")}</p>
      <p class="muted">When you finish an examination you can print the result
      from the certificate page.</p>
      <h2>Announcements</h2>
      ${notes || '<p class="muted">No announcements.</p>'}
    </div>
  </div>`;
  on(ctx.root, "button.take", "click", (_ev, node) => {
    ctx.navigate(`#/exam/${(node as HTMLElement).dataset.exam}`);
  });
  qs<HTMLButtonElement>(ctx.root, "#logout").addEventListener("click", async () => {
    await ctx.api.logout();
    ctx.navigate("#/login");
  });
}

// -- exam page -------------------------------------------------------------------

export async function examView(ctx: ViewContext, examId: string): Promise<void> {
  const view = await ctx.api.startAttempt(examId);
  let countdown: Countdown | null = null;

  const submit = async () => {
    if (session.state === "submitting" || session.state === "submitted") return;
    session.markSubmitting();
    countdown?.stop();
    try {
      const result = await ctx.api.submitAttempt(session.attemptId);
      session.markSubmitted();
      renderResult(ctx, result);
    } catch (error) {
      if (error instanceof ApiError && error.code === "UNKNOWN_ATTEMPT") return;
      // Expired attempts still finalize server-side; fetch the stored result.
      const result = await ctx.api.attemptResult(session.attemptId);
      session.markSubmitted();
      renderResult(ctx, result);
    }
  };

  const session = new ExamSession(view, {
    save: (questionId, authored) => ctx.api.saveAnswer(view.attempt_id, questionId, authored),
    onServerSync: (remaining) => countdown?.sync(remaining),
    onExpired: () => void submit(),
    onChange: () => paintProgress(),
  });

  const cards = view.questions
    .map((card) => {
      const choices = card.choices
        .map(
          (text, displayIndex) => `
        <label class="choice">
          <input type="radio" name="q-${esc(card.question_id)}" value="${displayIndex}">
          <span>${esc(text)}</span>
        </label>`,
        )
        .join("");
      return `<section class="card question" id="card-${esc(card.question_id)}">
        <h3>Question ${card.position} of ${view.total_questions}</h3>
        <p class="stem">${esc(card.stem)}</p>
        ${choices}
        <div class="field-error" data-save-error="${esc(card.question_id)}"></div>
      </section>`;
    })
    .join("");
  const navButtons = view.questions
    .map(
      (card) =>
        `<button class="nav-dot" data-target="card-${esc(card.question_id)}" data-q="${esc(card.question_id)}">${card.position}</button>`,
    )
    .join("");

  ctx.root.innerHTML = `
  <header class="bar exam-bar">
    <span>${esc(view.exam_name)}${view.attempt_no === 2 ? " (re-examination)" : ""}</span>
    <span id="progress" class="muted"></span>
    <span id="clock" class="clock"></span>
  </header>
  ${view.instructions ? `<div class="card instructions">${esc(view.instructions)}</div>` : ""}
  <div class="columns">
    <div class="grow">${cards}</div>
    <aside class="card side sticky">
      <h2>Questions</h2>
      <div class="nav-grid">${navButtons}</div>
      <button id="submit-exam" class="primary">Submit examination</button>
      <p class="muted">Answers save automatically as you pick them.</p>
    </aside>
  </div>`;

  const paintProgress = () => {
    const progress = ctx.root.querySelector("#progress");
    if (progress)
      progress.textContent = `${session.answeredCount()} of ${view.total_questions} answered`;
    for (const card of view.questions) {
      const dot = ctx.root.querySelector(`[data-q="${card.question_id}"]`);
      if (dot) dot.classList.toggle("answered", session.selectedAuthored(card.question_id) !== null);
      const slot = ctx.root.querySelector(`[data-save-error="${card.question_id}"]`);
      if (slot) slot.textContent = session.saveError(card.question_id) ?? "";
    }
  };

  // Restore previously saved selections (display positions via the permutation).
  for (const card of view.questions) {
    const display = session.selectedDisplay(card.question_id);
    if (display !== null) {
      const input = ctx.root.querySelector<HTMLInputElement>(
        `#card-${card.question_id} input[value="${display}"]`,
      );
      if (input) input.checked = true;
    }
  }
  paintProgress();

  on(ctx.root, ".question input[type=radio]", "change", (_ev, node) => {
    const input = node as HTMLInputElement;
    const questionId = input.name.slice(2);
    session.select(questionId, Number(input.value));
  });
  on(ctx.root, ".nav-dot", "click", (_ev, node) => {
    const target = (node as HTMLElement).dataset.target;
    if (target) document.getElementById(target)?.scrollIntoView({ behavior: "smooth" });
  });
  qs<HTMLButtonElement>(ctx.root, "#submit-exam").addEventListener("click", () => void submit());

  const clockSlot = qs<HTMLElement>(ctx.root, "#clock");
  countdown = new Countdown({
    onTick: (left) => {
      clockSlot.textContent = formatClock(left);
      clockSlot.classList.toggle("urgent", left <= 60);
    },
    onZero: () => void submit(),
  });
  countdown.start(view.remaining_seconds);
}

// -- result / certificate ----------------------------------------------------------

export function renderResult(ctx: ViewContext, result: ResultView): void {
  const verdict = result.outcome === "Passed" ? "ok" : "error";
  ctx.root.innerHTML = `
  <div class="card narrow">
    <h1>Examination Result</h1>
    ${banner(verdict, `${result.exam_name}: ${result.outcome}`)}
    <table>
      <tr><th>Raw score</th><td>${result.raw_score} of ${result.total_questions}</td></tr>
      <tr><th>Weighted</th><td>${esc(result.weighted_display)}</td></tr>
      <tr><th>Passing rate</th><td>${esc(result.passing_rate)}%</td></tr>
      <tr><th>Submitted</th><td>${new Date(result.submitted_at).toLocaleString()}</td></tr>
    </table>
    <p>
      <a class="button" href="#/certificate">View certificate</a>
      <a class="button" href="#/dashboard">Back to dashboard</a>
    </p>
  </div>`;
}

export async function resultView(ctx: ViewContext, attemptId: string): Promise<void> {
  renderResult(ctx, await ctx.api.attemptResult(attemptId));
}

export async function certificateView(ctx: ViewContext): Promise<void> {
  const cert: Certificate = await ctx.api.certificate();
  const rows = cert.rows
    .map(
      (row, index) => `<tr>
      <td>${index + 1}</td>
      <td>${esc(row.exam_name)}</td>
      <td>${new Date(row.finalized_at).toLocaleString()}</td>
      <td>${esc(row.weighted_display)}</td>
      <td class="${row.outcome === "Passed" ? "ok-text" : "error-text"}">${row.outcome}</td>
    </tr>`,
    )
    .join("");
  ctx.root.innerHTML = `
  <div class="card printable">
    <h1>EXAMINATION PROGRESS</h1>
    <div class="identity">
      <div class="big">${esc(cert.examinee_name)}</div>
      <div>${esc(cert.student_number)}</div>
      <div>${esc(cert.course_name)}${cert.major_name ? " — " + esc(cert.major_name) : ""}</div>
    </div>
    <table>
      <thead><tr><th>#</th><th>Examination</th><th>Finalized</th><th>Result</th><th>Status</th></tr></thead>
      <tbody>${rows || '<tr><td colspan="5" class="muted">No finalized examinations yet.</td></tr>'}</tbody>
    </table>
    <p class="overall">Overall rating: <strong>${esc(cert.overall_rating)}</strong> —
      <span class="${cert.overall_outcome === "Passed" ? "ok-text" : "error-text"}">${cert.overall_outcome}</span></p>
    <p class="noprint">
      <button id="print-cert" class="primary">Print preview</button>
      <a class="button" href="#/dashboard">Back to dashboard</a>
    </p>
  </div>`;
  qs<HTMLButtonElement>(ctx.root, "#print-cert").addEventListener("click", () => window.print());
}
