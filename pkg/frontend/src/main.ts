/** Hash router wiring views to the API client. */
import { ApiClient, ApiError } from "./api.js";
import { banner } from "./dom.js";
import {
  adminHomeView,
  announcementsView,
  coursesView,
  examsView,
  questionsView,
  reportsView,
  verifyQueueView,
} from "./views/admin.js";
import {
  ViewContext,
  certificateView,
  dashboardView,
  examView,
  loginView,
  pendingView,
  registerView,
  resultView,
} from "./views/examinee.js";

const api = new ApiClient();
const root = document.getElementById("app") as HTMLElement;

function navigate(hash: string): void {
  if (location.hash === hash) {
    void route();
  } else {
    location.hash = hash;
  }
}

const ctx: ViewContext = { api, navigate, root };

async function route(): Promise<void> {
  const hash = location.hash || "#/";
  const parts = hash.replace(/^#\//, "").split("/");
  const [head, ...rest] = parts;
  try {
    if (!api.token) {
      if (head === "register") return await registerView(ctx);
      if (head === "pending") return pendingView(ctx);
      return loginView(ctx);
    }
    if (api.role === "Admin") {
      switch (head) {
        case "admin":
          switch (rest[0]) {
            case "courses":
              return await coursesView(ctx);
            case "exams":
              return await examsView(ctx);
            case "questions":
              return await questionsView(ctx, rest[1] ?? "");
            case "announcements":
              return await announcementsView(ctx);
            case "reports":
              return await reportsView(ctx, rest[1]);
            case "verify":
            case undefined:
              return await verifyQueueView(ctx);
            default:
              return await adminHomeView(ctx);
          }
        default:
          return await adminHomeView(ctx);
      }
    }
    switch (head) {
      case "exam":
        return await examView(ctx, rest[0] ?? "");
      case "result":
        return await resultView(ctx, rest[0] ?? "");
      case "certificate":
        return await certificateView(ctx);
      case "pending":
        return pendingView(ctx);
      default:
        return await dashboardView(ctx);
    }
  } catch (error) {
    if (error instanceof ApiError && error.status === 401) {
      loginView(ctx);
      return;
    }
    root.innerHTML = `<div class="card narrow">${banner(
      "error",
      error instanceof Error ? error.message : String(error),
    )}<p><a href="#/dashboard">Back</a></p></div>`;
  }
}

window.addEventListener("hashchange", () => void route());
void route();
