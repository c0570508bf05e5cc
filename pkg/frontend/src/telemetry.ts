// Click telemetry emitter. Fire-and-forget: a failed POST is retried once
// with the same client_seq (the server dedupes on it), and nothing here ever
// throws into the UI. The sequence counter is per-session and monotone.

import type { ClickPayload } from './types.js';

type SendFn = (event: ClickPayload) => Promise<unknown>;

function randomSessionId(): string {
  if (typeof crypto !== 'undefined' && crypto.randomUUID) return crypto.randomUUID();
  return `s-${Date.now().toString(36)}-${Math.random().toString(36).slice(2)}`;
}

export class ClickTracker {
  private seq = 0;
  private pending: Promise<unknown>[] = [];

  constructor(
    private readonly send: SendFn,
    private readonly userId: string,
    readonly sessionId: string = randomSessionId(),
    private readonly retryDelayMs = 1000,
  ) {}

  get nextSeq(): number {
    return this.seq;
  }

  /** Emit one event; returns the sequence number it was assigned. */
  emit(target: string, tweetId?: string): number {
    const payload: ClickPayload = {
      session_id: this.sessionId,
      user_id: this.userId,
      target,
      client_timestamp: new Date().toISOString(),
      client_seq: this.seq++,
    };
    if (tweetId !== undefined) payload.tweet_id = tweetId;

    const attempt = this.send(payload).catch(
      () =>
        new Promise<void>((resolve) => {
          setTimeout(() => {
            // Identical payload on retry: same client_seq, server dedupes.
            this.send(payload)
              .catch(() => undefined)
              .then(() => resolve());
          }, this.retryDelayMs);
        }),
    );
    this.pending.push(attempt);
    return payload.client_seq;
  }

  /** Await all outstanding sends (test hook; the UI never waits on this). */
  async flush(): Promise<void> {
    const outstanding = this.pending;
    this.pending = [];
    await Promise.all(outstanding);
  }
}
