/**
 * Admin views: verification queue, course/major management, exam form,
 * question editor, announcements, grade/item-analysis reports.
 */
import { ApiClient, ApiError, ExamRow } from "../api.js";
import { banner, clearFieldErrors, downloadText, esc, on, qs, showFieldErrors } from "../dom.js";
import type { ViewContext } from "./examinee.js";

function shell(ctx: ViewContext, active: string, body: string): void {
  const tabs = [
    ["verify", "Examinees"],
    ["courses", "Courses"],
    ["exams", "Exams"],
    ["announcements", "Announcements"],
    ["reports", "Reports"],
  ]
    .map(
      ([key, label]) =>
        `<a class="tab ${key === active ? "active" : ""}" href="#/admin/${key}">${label}</a>`,
    )
    .join("");
  ctx.root.innerHTML = `
  <header class="bar">
    <span>Admin — Mock Board Examination</span>
    <nav>${tabs}</nav>
    <button id="logout">Log out</button>
  </header>
  <div id="admin-body">${body}</div>`;
  qs<HTMLButtonElement>(ctx.root, "#logout").addEventListener("click", async () => {
    await ctx.api.logout();
    ctx.navigate("#/login");
  });
}

export async function adminHomeView(ctx: ViewContext): Promise<void> {
  await verifyQueueView(ctx);
}

// -- verification queue -------------------------------------------------------

export async function verifyQueueView(ctx: ViewContext): Promise<void> {
  const { accounts } = await ctx.api.pendingAccounts();
  const rows = accounts
    .map(
      (a) => `<tr data-row="${esc(a.account_id)}">
      <td>${esc(a.name ?? a.username)}</td>
      <td>${esc(a.student_number ?? "")}</td>
      <td>${esc(a.course_name ?? "")}</td>
      <td>${new Date(a.created_at).toLocaleDateString()}</td>
      <td><button class="verify" data-id="${esc(a.account_id)}">Verify</button></td>
    </tr>`,
    )
    .join("");
  shell(
    ctx,
    "verify",
    `<div class="card">
      <h2>Pending applicants</h2>
      <p class="muted">Examinees cannot log in until verified.</p>
      <table>
        <thead><tr><th>Name</th><th>Student No.</th><th>Course</th><th>Registered</th><th></th></tr></thead>
        <tbody>${rows || '<tr><td colspan="5" class="muted">No pending registrations.</td></tr>'}</tbody>
      </table>
    </div>`,
  );
  on(ctx.root, "button.verify", "click", async (_ev, node) => {
    const id = (node as HTMLElement).dataset.id!;
    await ctx.api.verifyAccount(id);
    ctx.root.querySelector(`[data-row="${id}"]`)?.remove();
  });
}

// -- courses ---------------------------------------------------------------------

export async function coursesView(ctx: ViewContext): Promise<void> {
  const { courses } = await ctx.api.courses();
  const rows = courses
    .map(
      (c, i) => `<tr>
      <td>${i + 1}</td>
      <td>${esc(c.name)}</td>
      <td>${esc(c.majors.map((m) => m.name).join(", ") || "—")}</td>
      <td>${esc(c.created_by)}</td>
      <td>${new Date(c.created_at).toLocaleString()}</td>
      <td>${c.updated_at ? new Date(c.updated_at).toLocaleString() : "--"}</td>
      <td><button class="danger delete-course" data-id="${esc(c.course_id)}">Delete</button></td>
    </tr>`,
    )
    .join("");
  shell(
    ctx,
    "courses",
    `<div class="card">
      <h2>Courses offered by the college</h2>
      <table>
        <thead><tr><th>#</th><th>Course</th><th>Majors</th><th>Created By</th>
        <th>Date Created</th><th>Date Update</th><th>Actions</th></tr></thead>
        <tbody>${rows || '<tr><td colspan="7" class="muted">No courses yet.</td></tr>'}</tbody>
      </table>
      <h3>Add course</h3>
      <form id="course-form" class="inline-form">
        <input name="name" placeholder="Course name" required>
        <input name="majors" placeholder="Majors, comma separated (optional)">
        <div class="field-error" data-error-for="name"></div>
        <button type="submit">Add</button>
      </form>
      <div id="course-msg"></div>
    </div>`,
  );
  qs<HTMLFormElement>(ctx.root, "#course-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    clearFieldErrors(ctx.root);
    const data = new FormData(ev.target as HTMLFormElement);
    const majors = String(data.get("majors") || "")
      .split(",")
      .map((name) => name.trim())
      .filter(Boolean)
      .map((name) => ({ name }));
    try {
      await ctx.api.createCourse(String(data.get("name")), majors);
      await coursesView(ctx);
    } catch (error) {
      if (error instanceof ApiError) {
        showFieldErrors(ctx.root, error.fields);
        qs(ctx.root, "#course-msg").innerHTML = banner("error", error.message);
      }
    }
  });
  on(ctx.root, ".delete-course", "click", async (_ev, node) => {
    try {
      await ctx.api.deleteCourse((node as HTMLElement).dataset.id!);
      await coursesView(ctx);
    } catch (error) {
      if (error instanceof ApiError)
        qs(ctx.root, "#course-msg").innerHTML = banner("error", error.message);
    }
  });
}

// -- exams -----------------------------------------------------------------------

export async function examsView(ctx: ViewContext): Promise<void> {
  const [{ exams }, { courses }] = await Promise.all([ctx.api.exams(), ctx.api.courses()]);
  const courseOptions = courses
    .map((c) => `<option value="${esc(c.course_id)}">${esc(c.name)}</option>`)
    .join("");
  const rows = exams
    .map(
      (e, i) => `<tr>
      <td>${i + 1}</td>
      <td>${esc(e.name)}</td>
      <td>${esc(e.exam_date)}</td>
      <td>${e.duration_minutes}</td>
      <td>${esc(e.passing_rate)}</td>
      <td>${esc(e.weight)}</td>
      <td>${e.total_questions}</td>
      <td>
        <a class="button" href="#/admin/questions/${esc(e.exam_id)}">Questions</a>
        <button class="danger delete-exam" data-id="${esc(e.exam_id)}">Delete</button>
      </td>
    </tr>`,
    )
    .join("");
  shell(
    ctx,
    "exams",
    `<div class="card">
      <h2>Exams offered by the college</h2>
      <table>
        <thead><tr><th>#</th><th>Module</th><th>Date</th><th>Duration</th>
        <th>Pass Rate</th><th>Weight</th><th>Items</th><th>Actions</th></tr></thead>
        <tbody>${rows || '<tr><td colspan="8" class="muted">No exams yet.</td></tr>'}</tbody>
      </table>
      <h3>Add new exam details</h3>
      <form id="exam-form" class="stack-form">
        <label>Exam Name <input name="name" required></label>
        <div class="field-error" data-error-for="name"></div>
        <label>Course <select name="course_id">${courseOptions}</select></label>
        <label>Examination Date <input name="exam_date" type="date" required></label>
        <div class="field-error" data-error-for="exam_date"></div>
        <label>Exam Time Limit (minutes) <input name="duration_minutes" type="number" min="1" required></label>
        <div class="field-error" data-error-for="duration_minutes"></div>
        <label>Re-Examination Date <input name="reexam_date" type="date"></label>
        <div class="field-error" data-error-for="reexam_date"></div>
        <label>Passing Rate (%) <input name="passing_rate" required></label>
        <div class="field-error" data-error-for="passing_rate"></div>
        <label>Weight toward overall rating (%) <input name="weight" required></label>
        <div class="field-error" data-error-for="weight"></div>
        <label>Exam Instructions <textarea name="instructions"></textarea></label>
        <button type="submit">Save exam</button>
      </form>
      <div id="exam-msg"></div>
    </div>`,
  );
  qs<HTMLFormElement>(ctx.root, "#exam-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    clearFieldErrors(ctx.root);
    const data = new FormData(ev.target as HTMLFormElement);
    try {
      const created = await ctx.api.createExam({
        name: String(data.get("name")),
        course_id: String(data.get("course_id")),
        exam_date: String(data.get("exam_date")),
        duration_minutes: Number(data.get("duration_minutes")),
        passing_rate: String(data.get("passing_rate")),
        weight: String(data.get("weight")),
        instructions: String(data.get("instructions") || ""),
        major_id: null,
        reexam_date: String(data.get("reexam_date") || "") || null,
      });
      if (created.warning) {
        qs(ctx.root, "#exam-msg").innerHTML = banner("info", created.warning);
        setTimeout(() => void examsView(ctx), 1200);
      } else {
        await examsView(ctx);
      }
    } catch (error) {
      if (error instanceof ApiError) {
        showFieldErrors(ctx.root, error.fields);
        qs(ctx.root, "#exam-msg").innerHTML = banner("error", error.message);
      }
    }
  });
  on(ctx.root, ".delete-exam", "click", async (_ev, node) => {
    try {
      await ctx.api.deleteExam((node as HTMLElement).dataset.id!);
      await examsView(ctx);
    } catch (error) {
      if (error instanceof ApiError)
        qs(ctx.root, "#exam-msg").innerHTML = banner("error", error.message);
    }
  });
}

// -- question editor ----------------------------------------------------------------

export async function questionsView(ctx: ViewContext, examId: string): Promise<void> {
  const { questions } = await ctx.api.questions(examId);
  const rows = questions
    .map(
      (q) => `<tr>
      <td>${q.position}</td>
      <td>${esc(q.stem)}</td>
      <td>${q.choices.map((c, i) => (i === q.correct_index ? `<strong>${esc(c)} ✓</strong>` : esc(c))).join("<br>")}</td>
      <td>${esc(q.category ?? "")}</td>
      <td><button class="danger delete-q" data-id="${esc(q.question_id)}">Delete</button></td>
    </tr>`,
    )
    .join("");
  const choiceInputs = ["A", "B", "C", "D", "E"]
    .map(
      (letter, i) => `
      <div class="choice-row">
        <input type="radio" name="correct" value="${i}" ${i === 0 ? "checked" : ""}
          title="Mark choice ${letter} correct">
        <input name="choice_${i}" placeholder="Choice ${letter}${i < 2 ? " (required)" : " (optional)"}">
      </div>`,
    )
    .join("");
  shell(
    ctx,
    "exams",
    `<div class="card">
      <p><a href="#/admin/exams">&larr; all exams</a></p>
      <h2>Question bank</h2>
      <table>
        <thead><tr><th>#</th><th>Question</th><th>Choices (correct marked)</th><th>Category</th><th></th></tr></thead>
        <tbody>${rows || '<tr><td colspan="5" class="muted">No questions yet.</td></tr>'}</tbody>
      </table>
      <h3>Add question</h3>
      <form id="question-form" class="stack-form">
        <label>Question <textarea name="stem" required></textarea></label>
        <div class="field-error" data-error-for="stem"></div>
        ${choiceInputs}
        <div class="field-error" data-error-for="choices"></div>
        <div class="field-error" data-error-for="correct_index"></div>
        <label>Category (optional) <input name="category"></label>
        <button type="submit">Save question</button>
      </form>
      <div id="question-msg"></div>
    </div>`,
  );
  qs<HTMLFormElement>(ctx.root, "#question-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    clearFieldErrors(ctx.root);
    const form = ev.target as HTMLFormElement;
    const data = new FormData(form);
    const choices: string[] = [];
    for (let i = 0; i < 5; i += 1) {
      const text = String(data.get(`choice_${i}`) || "").trim();
      if (text) choices.push(text);
    }
    const correct = Number(data.get("correct"));
    if (correct >= choices.length) {
      // The editor refuses to save unless a populated choice is marked correct.
      qs(ctx.root, '[data-error-for="correct_index"]').textContent =
        "mark one of the filled-in choices as correct";
      return;
    }
    try {
      await ctx.api.createQuestion(examId, {
        stem: String(data.get("stem")),
        choices,
        correct_index: correct,
        category: String(data.get("category") || "").trim() || null,
      });
      await questionsView(ctx, examId);
    } catch (error) {
      if (error instanceof ApiError) {
        showFieldErrors(ctx.root, error.fields);
        qs(ctx.root, "#question-msg").innerHTML = banner("error", error.message);
      }
    }
  });
  on(ctx.root, ".delete-q", "click", async (_ev, node) => {
    try {
      await ctx.api.deleteQuestion(examId, (node as HTMLElement).dataset.id!);
      await questionsView(ctx, examId);
    } catch (error) {
      if (error instanceof ApiError)
        qs(ctx.root, "#question-msg").innerHTML = banner("error", error.message);
    }
  });
}

// -- announcements --------------------------------------------------------------------

export async function announcementsView(ctx: ViewContext): Promise<void> {
  const { announcements } = await ctx.api.announcements();
  const rows = announcements
    .map(
      (a) => `<div class="note">${esc(a.body)}
      <div class="muted">by ${esc(a.author)} — ${new Date(a.created_at).toLocaleString()}</div></div>`,
    )
    .join("");
  shell(
    ctx,
    "announcements",
    `<div class="card">
      <h2>Announcements</h2>
      <form id="announce-form" class="inline-form">
        <input name="body" placeholder="NOTICE: ..." required>
        <button type="submit">Post</button>
      </form>
      <div class="field-error" data-error-for="body"></div>
      ${rows || '<p class="muted">Nothing posted yet.</p>'}
    </div>`,
  );
  qs<HTMLFormElement>(ctx.root, "#announce-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const data = new FormData(ev.target as HTMLFormElement);
    try {
      await ctx.api.postAnnouncement(String(data.get("body")));
      await announcementsView(ctx);
    } catch (error) {
      if (error instanceof ApiError) showFieldErrors(ctx.root, error.fields);
    }
  });
}

// -- reports -------------------------------------------------------------------------

export async function reportsView(ctx: ViewContext, examId?: string): Promise<void> {
  const { exams } = await ctx.api.exams();
  const options = exams
    .map(
      (e) =>
        `<option value="${esc(e.exam_id)}" ${e.exam_id === examId ? "selected" : ""}>${esc(e.name)}</option>`,
    )
    .join("");
  let body = '<p class="muted">Pick an exam to see its grade report and item analysis.</p>';
  if (examId) {
    const [grades, analysis] = await Promise.all([
      ctx.api.gradeReport(examId),
      ctx.api.itemAnalysis(examId),
    ]);
    const gradeRows = grades.rows
      .map(
        (r) => `<tr>
        <td>${esc(r.examinee)}</td><td>${esc(r.student_number)}</td><td>${r.attempt}</td>
        <td>${r.raw_score}</td><td>${esc(r.weighted_score)}</td><td>${esc(r.outcome)}</td>
        <td>${new Date(r.submitted_at).toLocaleString()}</td>
      </tr>`,
      )
      .join("");
    const itemRows = analysis.rows
      .map(
        (r) => `<tr class="${r.flag ? "flagged" : ""}">
        <td>${r.position}</td><td>${esc(r.stem_excerpt)}</td><td>${r.n_responses}</td>
        <td>${r.difficulty === null ? "—" : r.difficulty.toFixed(2)}</td>
        <td>${r.discrimination === null ? "—" : r.discrimination.toFixed(2)}</td>
        <td>${r.choice_distribution.join(" / ")}</td>
        <td>${esc(r.flag ?? "")}</td>
      </tr>`,
      )
      .join("");
    body = `
      <h3>Grade report — ${esc(grades.exam_name)}</h3>
      <p><button id="download-csv">Download CSV</button></p>
      <table>
        <thead><tr><th>Examinee</th><th>Student No.</th><th>Attempt</th><th>Raw</th>
        <th>Weighted</th><th>Outcome</th><th>Submitted</th></tr></thead>
        <tbody>${gradeRows || '<tr><td colspan="7" class="muted">No finalized attempts.</td></tr>'}</tbody>
      </table>
      <h3>Item analysis (${analysis.n_examinees} examinees)</h3>
      <table>
        <thead><tr><th>#</th><th>Stem</th><th>N</th><th>Difficulty</th>
        <th>Discrimination</th><th>Choice spread</th><th>Flag</th></tr></thead>
        <tbody>${itemRows || '<tr><td colspan="7" class="muted">No questions.</td></tr>'}</tbody>
      </table>`;
  }
  shell(
    ctx,
    "reports",
    `<div class="card">
      <h2>Reports</h2>
      <label>Exam <select id="report-exam">
        <option value="">— choose —</option>${options}
      </select></label>
      ${body}
    </div>`,
  );
  qs<HTMLSelectElement>(ctx.root, "#report-exam").addEventListener("change", (ev) => {
    const value = (ev.target as HTMLSelectElement).value;
    ctx.navigate(value ? `#/admin/reports/${value}` : "#/admin/reports");
  });
  const download = ctx.root.querySelector("#download-csv");
  if (download && examId) {
    download.addEventListener("click", async () => {
      downloadText(`grades-${examId}.csv`, await ctx.api.gradeReportCsv(examId));
    });
  }
}
