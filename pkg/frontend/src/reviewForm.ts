/** Review form: one binary answer per configured question plus optional
 * suggested external links. Submission stays disabled until every question
 * is answered and a token is present. */

import { Question, ReviewBody, TargetInfo } from "./api";
import { esc } from "./html";

export interface ReviewFormState {
  questions: Question[];
  answers: Record<string, boolean | null>;
  links: string[];
  token: string;
}

export function newFormState(questions: Question[]): ReviewFormState {
  const answers: Record<string, boolean | null> = {};
  for (const q of questions) {
    answers[q.id] = null;
  }
  return { questions, answers, links: [], token: "" };
}

export function setAnswer(state: ReviewFormState, questionId: string, value: boolean): void {
  if (!(questionId in state.answers)) {
    throw new Error(`unknown question ${questionId}`);
  }
  state.answers[questionId] = value;
}

export function addLink(state: ReviewFormState, iri: string): void {
  const trimmed = iri.trim();
  if (trimmed && !state.links.includes(trimmed)) {
    state.links.push(trimmed);
  }
}

export function removeLink(state: ReviewFormState, iri: string): void {
  state.links = state.links.filter((l) => l !== iri);
}

export function allAnswered(state: ReviewFormState): boolean {
  return state.questions.every((q) => state.answers[q.id] !== null);
}

export function canSubmit(state: ReviewFormState): boolean {
  return allAnswered(state) && state.token.trim().length > 0;
}

export function toRequestBody(state: ReviewFormState): ReviewBody {
  if (!allAnswered(state)) {
    throw new Error("all questions must be answered before submitting");
  }
  const answers: Record<string, boolean> = {};
  for (const q of state.questions) {
    answers[q.id] = state.answers[q.id] as boolean;
  }
  return { answers, suggested_links: [...state.links] };
}

export function renderForm(state: ReviewFormState, target: TargetInfo): string {
  const rows = state.questions
    .map((q) => {
      const current = state.answers[q.id];
      const checked = (v: boolean) => (current === v ? " checked" : "");
      return `
      <fieldset class="question" data-question="${esc(q.id)}">
        <legend>${esc(q.text)}</legend>
        <label><input type="radio" name="${esc(q.id)}" value="yes"${checked(true)}> Agree</label>
        <label><input type="radio" name="${esc(q.id)}" value="no"${checked(false)}> Disagree</label>
      </fieldset>`;
    })
    .join("\n");
  const links = state.links
    .map(
      (l) =>
        `<li>${esc(l)} <button type="button" class="remove-link" data-iri="${esc(l)}">remove</button></li>`,
    )
    .join("\n");
  return `
  <section class="review-form">
    <header>
      <h2>Review: ${esc(target.title)}</h2>
      <p class="meta">Field: ${esc(target.field)} · Target: ${esc(target.id)}</p>
    </header>
    <form id="review">
      ${rows}
      <fieldset class="links">
        <legend>Suggest links to external resources</legend>
        <ul class="link-list">${links}</ul>
        <input type="url" id="link-input" placeholder="https://...">
        <button type="button" id="add-link">Add link</button>
      </fieldset>
      <label class="token">Reviewer token
        <input type="password" id="token" value="${esc(state.token)}">
      </label>
      <button type="submit" id="submit"${canSubmit(state) ? "" : " disabled"}>Submit review</button>
    </form>
  </section>`;
}

export function renderSignInPrompt(): string {
  return `
  <section class="sign-in">
    <h2>Sign in required</h2>
    <p>Submitting a review requires a reviewer token. Paste yours into the
    token field and submit again.</p>
  </section>`;
}
