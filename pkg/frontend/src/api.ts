/**
 * Typed client for the /mockboard/api HTTP interface.
 *
 * Every failure surfaces as an ApiError carrying the server envelope's
 * machine code and field map. The client performs no grading arithmetic;
 * score strings are passed through verbatim. Examinee-facing types carry
 * no correct-answer fields by construction.
 */

export const API_BASE = "/mockboard/api";

export interface ErrorEnvelope {
  code: string;
  message: string;
  fields: Record<string, string>;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public fields: Record<string, string> = {},
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface LoginResponse {
  token: string;
  account_id: string;
  username: string;
  role: "Admin" | "Examinee";
  scope_course_id: string | null;
  expires_at: string;
}

export interface Major {
  major_id: string;
  name: string;
}

export interface Course {
  course_id: string;
  name: string;
  majors: Major[];
  created_by: string;
  created_at: string;
  updated_at: string | null;
}

export interface ExamRow {
  exam_id: string;
  course_id: string;
  major_id: string | null;
  name: string;
  instructions: string;
  exam_date: string;
  reexam_date: string | null;
  duration_minutes: number;
  passing_rate: string;
  weight: string;
  total_questions: number;
}

export interface DashboardExam extends ExamRow {
  status: "Locked" | "TakeExam" | "Retake" | "ViewCertificate";
  attempt_id: string | null;
}

export interface Dashboard {
  profile: {
    name: string;
    student_number: string;
    course_name: string;
    major_name: string | null;
  };
  exams: DashboardExam[];
  announcements: Announcement[];
}

export interface Announcement {
  announcement_id: string;
  body: string;
  author: string;
  created_at: string;
}

export interface AttemptQuestion {
  question_id: string;
  position: number;
  stem: string;
  /** Choice texts in display order. */
  choices: string[];
  /** choice_order[displayIndex] = authored index; answers are sent authored. */
  choice_order: number[];
}

export interface AttemptView {
  attempt_id: string;
  exam_id: string;
  exam_name: string;
  instructions: string;
  attempt_no: number;
  started_at: string;
  deadline: string;
  remaining_seconds: number;
  grace_seconds: number;
  total_questions: number;
  questions: AttemptQuestion[];
  /** question_id -> authored choice index, as previously saved. */
  saved_answers: Record<string, number>;
  resumed: boolean;
}

export interface AnswerAck {
  attempt_id: string;
  question_id: string;
  choice: number;
  remaining_seconds: number;
}

export interface ResultView {
  attempt_id: string;
  exam_id: string;
  exam_name: string;
  attempt_no: number;
  raw_score: number;
  total_questions: number;
  weight: string;
  passing_rate: string;
  weighted_points: string;
  weighted_display: string;
  outcome: "Passed" | "Failed";
  started_at: string;
  submitted_at: string;
}

export interface CertificateRow {
  exam_id: string;
  exam_name: string;
  finalized_at: string;
  raw_score: number;
  total_questions: number;
  weighted_display: string;
  outcome: "Passed" | "Failed";
}

export interface Certificate {
  examinee_name: string;
  student_number: string;
  course_name: string;
  major_name: string | null;
  rows: CertificateRow[];
  overall_rating: string;
  overall_outcome: "Passed" | "Failed";
  issued_at: string;
}

export interface AdminQuestion {
  question_id: string;
  exam_id: string;
  position: number;
  stem: string;
  choices: string[];
  correct_index: number;
  category: string | null;
}

export interface AccountRow {
  account_id: string;
  username: string;
  role: string;
  status: string;
  created_at: string;
  name?: string;
  student_number?: string;
  course_id?: string;
  course_name?: string | null;
  major_id?: string | null;
}

export interface GradeReportRow {
  examinee: string;
  student_number: string;
  attempt: number;
  raw_score: number;
  weighted_score: string;
  outcome: string;
  started_at: string;
  submitted_at: string;
}

export interface ItemAnalysisRow {
  question_id: string;
  position: number;
  stem_excerpt: string;
  n_responses: number;
  difficulty: number | null;
  discrimination: number | null;
  choice_distribution: number[];
  unanswered: number;
  flag: string | null;
}

export interface RegisterPayload {
  username: string;
  password: string;
  student_number: string;
  last_name: string;
  first_name: string;
  middle_name: string;
  address: string;
  contact_number: string;
  birthdate: string;
  course_id: string;
  major_id: string | null;
  terms_accepted: boolean;
}

export interface ExamPayload {
  name: string;
  course_id: string;
  exam_date: string;
  duration_minutes: number;
  passing_rate: string | number;
  weight: string | number;
  instructions: string;
  major_id: string | null;
  reexam_date: string | null;
}

export interface QuestionPayload {
  stem: string;
  choices: string[];
  correct_index: number;
  category: string | null;
}

/** Minimal storage facade so tests can inject a memory-backed stand-in. */
export interface TokenStorage {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export class MemoryStorage implements TokenStorage {
  private map = new Map<string, string>();
  getItem(key: string) {
    return this.map.get(key) ?? null;
  }
  setItem(key: string, value: string) {
    this.map.set(key, value);
  }
  removeItem(key: string) {
    this.map.delete(key);
  }
}

const TOKEN_KEY = "mockboard.token";
const ROLE_KEY = "mockboard.role";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private base: string = API_BASE,
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
    private storage: TokenStorage = sessionStorage,
  ) {}

  get token(): string | null {
    return this.storage.getItem(TOKEN_KEY);
  }

  get role(): string | null {
    return this.storage.getItem(ROLE_KEY);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    const token = this.token;
    if (token) headers["Authorization"] = `Bearer ${token}`;
    const response = await this.fetchFn(this.base + path, {
      method,
      headers,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    if (response.status === 204) return undefined as T;
    const text = await response.text();
    const payload = text ? JSON.parse(text) : {};
    if (!response.ok) {
      const envelope = payload as Partial<ErrorEnvelope>;
      throw new ApiError(
        response.status,
        envelope.code ?? "ERROR",
        envelope.message ?? response.statusText,
        envelope.fields ?? {},
      );
    }
    return payload as T;
  }

  /** Raw GET returning text (CSV downloads) with the auth header attached. */
  async fetchText(path: string): Promise<string> {
    const token = this.token;
    const response = await this.fetchFn(this.base + path, {
      headers: token ? { Authorization: `Bearer ${token}` } : {},
    });
    if (!response.ok) throw new ApiError(response.status, "ERROR", response.statusText);
    return response.text();
  }

  // -- session ---------------------------------------------------------------

  async login(username: string, password: string): Promise<LoginResponse> {
    const res = await this.request<LoginResponse>("POST", "/login", { username, password });
    this.storage.setItem(TOKEN_KEY, res.token);
    this.storage.setItem(ROLE_KEY, res.role);
    return res;
  }

  async logout(): Promise<void> {
    try {
      await this.request("POST", "/logout");
    } finally {
      this.storage.removeItem(TOKEN_KEY);
      this.storage.removeItem(ROLE_KEY);
    }
  }

  register(payload: RegisterPayload) {
    return this.request<{ account_id: string; status: string }>("POST", "/register", payload);
  }

  // -- examinee ----------------------------------------------------------------

  courses() {
    return this.request<{ courses: Course[] }>("GET", "/courses");
  }

  dashboard() {
    return this.request<Dashboard>("GET", "/dashboard");
  }

  startAttempt(examId: string) {
    return this.request<AttemptView>("POST", "/attempts", { exam_id: examId });
  }

  saveAnswer(attemptId: string, questionId: string, authoredChoice: number) {
    return this.request<AnswerAck>(
      "PUT",
      `/attempts/${attemptId}/answers/${questionId}`,
      { choice: authoredChoice },
    );
  }

  submitAttempt(attemptId: string) {
    return this.request<ResultView>("POST", `/attempts/${attemptId}/submit`);
  }

  attemptResult(attemptId: string) {
    return this.request<ResultView>("GET", `/attempts/${attemptId}/result`);
  }

  certificate() {
    return this.request<Certificate>("GET", "/certificate");
  }

  // -- admin -------------------------------------------------------------------

  createCourse(name: string, majors: { name: string }[]) {
    return this.request<Course>("POST", "/courses", { name, majors });
  }

  updateCourse(courseId: string, name: string, majors: { major_id?: string; name: string }[]) {
    return this.request<Course>("PUT", `/courses/${courseId}`, { name, majors });
  }

  deleteCourse(courseId: string) {
    return this.request<{ ok: boolean }>("DELETE", `/courses/${courseId}`);
  }

  exams() {
    return this.request<{ exams: ExamRow[] }>("GET", "/exams");
  }

  createExam(payload: ExamPayload) {
    return this.request<ExamRow & { warning?: string }>("POST", "/exams", payload);
  }

  updateExam(examId: string, payload: ExamPayload) {
    return this.request<ExamRow & { warning?: string }>("PUT", `/exams/${examId}`, payload);
  }

  deleteExam(examId: string) {
    return this.request<{ ok: boolean }>("DELETE", `/exams/${examId}`);
  }

  questions(examId: string) {
    return this.request<{ exam_id: string; questions: AdminQuestion[] }>(
      "GET",
      `/exams/${examId}/questions`,
    );
  }

  createQuestion(examId: string, payload: QuestionPayload) {
    return this.request<AdminQuestion>("POST", `/exams/${examId}/questions`, payload);
  }

  updateQuestion(examId: string, questionId: string, payload: QuestionPayload) {
    return this.request<AdminQuestion>(
      "PUT",
      `/exams/${examId}/questions/${questionId}`,
      payload,
    );
  }

  deleteQuestion(examId: string, questionId: string) {
    return this.request<{ ok: boolean }>("DELETE", `/exams/${examId}/questions/${questionId}`);
  }

  pendingAccounts() {
    return this.request<{ accounts: AccountRow[] }>("GET", "/accounts?status=pending");
  }

  verifyAccount(accountId: string) {
    return this.request<AccountRow>("POST", `/accounts/${accountId}/verify`);
  }

  postAnnouncement(body: string) {
    return this.request<Announcement>("POST", "/announcements", { body });
  }

  announcements() {
    return this.request<{ announcements: Announcement[] }>("GET", "/announcements");
  }

  gradeReport(examId: string) {
    return this.request<{ exam_id: string; exam_name: string; rows: GradeReportRow[] }>(
      "GET",
      `/reports/grades/${examId}`,
    );
  }

  gradeReportCsv(examId: string) {
    return this.fetchText(`/reports/grades/${examId}.csv`);
  }

  itemAnalysis(examId: string) {
    return this.request<{
      exam_id: string;
      exam_name: string;
      n_examinees: number;
      rows: ItemAnalysisRow[];
    }>("GET", `/reports/item-analysis/${examId}`);
  }
}
