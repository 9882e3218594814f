/** Typed client for the assessment service REST routes.
 *
 * The UI performs no maturity computation of its own; everything rendered
 * comes verbatim from these responses, so the client also exposes the raw
 * response text where the tests assert byte identity with the server.
 */

export interface Question {
  id: string;
  text: string;
  measures: string[];
}

export interface TargetInfo {
  id: string;
  title: string;
  field: string;
  source: string;
  author: string;
  created_at: string;
}

export interface LevelStatus {
  level: number;
  name: string;
  passed: boolean;
  essential: [string, boolean][];
  important: [string, boolean][];
  useful: [string, boolean][];
  blocking: string[];
  not_applicable: string[];
}

export interface MeasureRow {
  id: string;
  score: number;
  passed: boolean;
  status: string;
  sources_used: string[];
  evidence: { kind: string; message: string; subject: string | null }[];
}

export interface RecommendedAction {
  measure: string;
  level: number;
  guidance: string;
  evidence: string;
}

export interface SuggestedLink {
  iri: string;
  suggested_by: number;
}

export interface MaturityReport {
  target: string;
  achieved_level: number;
  levels: LevelStatus[];
  measures: Record<string, MeasureRow>;
  recommended_actions: RecommendedAction[];
  reviews: { count: number; required: number };
  recommended_links: SuggestedLink[];
}

export interface QuestionTallyRow {
  id: string;
  text: string;
  measures: string[];
  agree: number;
  total: number;
  ratio: number | null;
}

export interface FeedbackReport {
  target: string;
  review_count: number;
  min_reviews_required: number;
  quorum_met: boolean;
  questions: QuestionTallyRow[];
  suggested_links: SuggestedLink[];
}

export interface ReviewBody {
  answers: Record<string, boolean>;
  suggested_links: string[];
}

export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async send(path: string, init?: RequestInit): Promise<string> {
    const resp = await this.fetchFn(this.baseUrl + path, init);
    const text = await resp.text();
    if (!resp.ok) {
      let detail = text;
      try {
        detail = JSON.parse(text).detail ?? text;
      } catch {
        // non-JSON error body; keep the raw text
      }
      throw new ApiError(resp.status, detail);
    }
    return text;
  }

  async getQuestions(): Promise<Question[]> {
    return JSON.parse(await this.send("/questions"));
  }

  async getTarget(targetId: string): Promise<TargetInfo> {
    return JSON.parse(await this.send(`/targets/${encodeURIComponent(targetId)}`));
  }

  /** Exact response bytes of the feedback route; rendered without rewriting. */
  async getFeedbackRaw(targetId: string): Promise<string> {
    return this.send(`/targets/${encodeURIComponent(targetId)}/feedback`);
  }

  async getFeedback(targetId: string): Promise<FeedbackReport> {
    return JSON.parse(await this.getFeedbackRaw(targetId));
  }

  async getReport(assessmentId: string): Promise<MaturityReport> {
    return JSON.parse(
      await this.send(`/assessments/${encodeURIComponent(assessmentId)}/report`),
    );
  }

  async submitReview(
    targetId: string,
    token: string,
    body: ReviewBody,
  ): Promise<{ id: string; target: string }> {
    return JSON.parse(
      await this.send(`/targets/${encodeURIComponent(targetId)}/reviews`, {
        method: "POST",
        headers: {
          "Content-Type": "application/json",
          Authorization: `Bearer ${token}`,
        },
        body: serializeReviewBody(body),
      }),
    );
  }
}

/** Canonical serialization: sorted keys, no whitespace. A form submission
 * therefore produces the same bytes as any other client sending the same
 * review document. */
export function serializeReviewBody(body: ReviewBody): string {
  const answers: Record<string, boolean> = {};
  for (const key of Object.keys(body.answers).sort()) {
    answers[key] = body.answers[key];
  }
  return JSON.stringify({ answers, suggested_links: body.suggested_links });
}
