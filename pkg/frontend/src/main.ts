/** Single-page wiring: hash routes over the REST client.
 *
 *   #/review/<target id>      the review form
 *   #/feedback/<target id>    aggregated reviewer feedback
 *   #/report/<assessment id>  the maturity report
 */

import { ApiClient, ApiError } from "./api";
import { esc } from "./html";
import {
  ReviewFormState,
  addLink,
  newFormState,
  removeLink,
  renderForm,
  renderSignInPrompt,
  setAnswer,
  toRequestBody,
} from "./reviewForm";
import { renderFeedback, renderReport } from "./reportView";

const api = new ApiClient(
  (window as { KGMM_BASE_URL?: string }).KGMM_BASE_URL ?? "",
);

function root(): HTMLElement {
  return document.getElementById("app") as HTMLElement;
}

function showError(message: string): void {
  root().innerHTML = `<section class="error"><p>${esc(message)}</p></section>`;
}

async function showReviewForm(targetId: string): Promise<void> {
  const [questions, target] = await Promise.all([
    api.getQuestions(),
    api.getTarget(targetId),
  ]);
  const state: ReviewFormState = newFormState(questions);
  state.token = sessionStorage.getItem("kgmm-token") ?? "";

  const rerender = () => {
    root().innerHTML = renderForm(state, target);
    wire();
  };

  const wire = () => {
    for (const fieldset of root().querySelectorAll<HTMLElement>(".question")) {
      const qid = fieldset.dataset.question as string;
      for (const input of fieldset.querySelectorAll<HTMLInputElement>("input[type=radio]")) {
        input.addEventListener("change", () => {
          setAnswer(state, qid, input.value === "yes");
          rerender();
        });
      }
    }
    const tokenInput = root().querySelector<HTMLInputElement>("#token");
    tokenInput?.addEventListener("input", () => {
      state.token = tokenInput.value;
      sessionStorage.setItem("kgmm-token", state.token);
      const submit = root().querySelector<HTMLButtonElement>("#submit");
      if (submit) {
        submit.disabled = !(state.token.trim() && Object.values(state.answers).every((v) => v !== null));
      }
    });
    root().querySelector("#add-link")?.addEventListener("click", () => {
      const input = root().querySelector<HTMLInputElement>("#link-input");
      if (input?.value) {
        addLink(state, input.value);
        rerender();
      }
    });
    for (const button of root().querySelectorAll<HTMLButtonElement>(".remove-link")) {
      button.addEventListener("click", () => {
        removeLink(state, button.dataset.iri as string);
        rerender();
      });
    }
    root().querySelector("#review")?.addEventListener("submit", (event) => {
      event.preventDefault();
      void submit();
    });
  };

  const submit = async () => {
    try {
      await api.submitReview(targetId, state.token, toRequestBody(state));
      // re-fetch so the author-facing numbers reflect the new review
      window.location.hash = `#/feedback/${targetId}`;
    } catch (err) {
      if (err instanceof ApiError && err.status === 401) {
        root().innerHTML = renderSignInPrompt() + renderForm(state, target);
        wire();
      } else {
        showError(err instanceof Error ? err.message : String(err));
      }
    }
  };

  rerender();
}

async function showFeedback(targetId: string): Promise<void> {
  root().innerHTML = renderFeedback(await api.getFeedbackRaw(targetId));
}

async function showReport(assessmentId: string): Promise<void> {
  root().innerHTML = renderReport(await api.getReport(assessmentId));
}

async function route(): Promise<void> {
  const hash = window.location.hash;
  try {
    const review = hash.match(/^#\/review\/(.+)$/);
    if (review) {
      await showReviewForm(decodeURIComponent(review[1]));
      return;
    }
    const feedback = hash.match(/^#\/feedback\/(.+)$/);
    if (feedback) {
      await showFeedback(decodeURIComponent(feedback[1]));
      return;
    }
    const report = hash.match(/^#\/report\/(.+)$/);
    if (report) {
      await showReport(decodeURIComponent(report[1]));
      return;
    }
    root().innerHTML = `
    <section class="home">
      <h2>kgmm</h2>
      <p>Open <code>#/review/&lt;target&gt;</code> to review,
      <code>#/feedback/&lt;target&gt;</code> for reviewer feedback, or
      <code>#/report/&lt;assessment&gt;</code> for a maturity report.</p>
    </section>`;
  } catch (err) {
    showError(err instanceof Error ? err.message : String(err));
  }
}

window.addEventListener("hashchange", () => void route());
window.addEventListener("DOMContentLoaded", () => void route());
