/** Maturity report and reviewer-feedback views. Everything shown is a
 * server field; no score or level is computed client-side. */

import { FeedbackReport, LevelStatus, MaturityReport } from "./api";
import { esc } from "./html";

function measureList(entries: [string, boolean][]): string {
  return entries
    .map(([name, ok]) => `<li class="${ok ? "pass" : "fail"}">${esc(name)}</li>`)
    .join("");
}

function levelRow(lvl: LevelStatus): string {
  const blocking = lvl.blocking.length
    ? `<p class="blocking">Blocked by: ${lvl.blocking.map(esc).join(", ")}</p>`
    : "";
  return `
  <article class="level ${lvl.passed ? "passed" : "failed"}">
    <h3>Level ${lvl.level}: ${esc(lvl.name)} - ${lvl.passed ? "reached" : "not reached"}</h3>
    <ul class="essential">${measureList(lvl.essential)}</ul>
    <ul class="important">${measureList(lvl.important)}</ul>
    <ul class="useful">${measureList(lvl.useful)}</ul>
    ${blocking}
  </article>`;
}

export function renderReport(report: MaturityReport): string {
  const actions = report.recommended_actions
    .map(
      (a) => `
      <li><strong>${esc(a.measure)}</strong> (level ${a.level}): ${esc(a.guidance)}</li>`,
    )
    .join("");
  const links = report.recommended_links
    .map(
      (l) =>
        `<li><a href="${esc(l.iri)}" rel="external">${esc(l.iri)}</a> (suggested by ${l.suggested_by})</li>`,
    )
    .join("");
  return `
  <section class="report">
    <header>
      <h2>Maturity report: ${esc(report.target)}</h2>
      <p class="gauge"><span class="achieved">${report.achieved_level}/5</span></p>
      <p class="reviews">Reviews: ${report.reviews.count} of ${report.reviews.required} required</p>
    </header>
    ${report.levels.map(levelRow).join("\n")}
    <section class="actions">
      <h3>Recommended next steps</h3>
      <ul>${actions || "<li>None; keep curating.</li>"}</ul>
    </section>
    <section class="links">
      <h3>Reviewer-suggested links</h3>
      <ul>${links || "<li>None yet.</li>"}</ul>
    </section>
  </section>`;
}

/** Renders the feedback route response. Takes the raw response text so the
 * displayed numbers are exactly what the server sent. */
export function renderFeedback(rawFeedback: string): string {
  const feedback: FeedbackReport = JSON.parse(rawFeedback);
  const rows = feedback.questions
    .map(
      (q) => `
      <tr>
        <td>${esc(q.text)}</td>
        <td>${q.agree} / ${q.total}</td>
        <td>${q.ratio === null ? "n/a" : q.ratio.toFixed(2)}</td>
      </tr>`,
    )
    .join("");
  const links = feedback.suggested_links
    .map((l) => `<li>${esc(l.iri)} (${l.suggested_by})</li>`)
    .join("");
  return `
  <section class="feedback">
    <h2>Reviewer feedback: ${esc(feedback.target)}</h2>
    <p class="quorum">${feedback.review_count} of ${feedback.min_reviews_required} required
      reviews · quorum ${feedback.quorum_met ? "met" : "not met"}</p>
    <table><tbody>${rows}</tbody></table>
    <ul class="suggested">${links}</ul>
  </section>`;
}
