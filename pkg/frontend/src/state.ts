// Filter-panel state. Two hard rules live here, not in the DOM layer:
//
// 1. The emitted query string contains exactly the non-default selections,
//    so the server's parser (whose defaults match DEFAULTS below) always
//    reconstructs precisely this panel state.
// 2. Hate and misinformation can never both be "yes": selecting one resets
//    the other to "no" and raises an inline notice. The panel is therefore
//    unable to emit a query the server would reject as mutually exclusive.

import type { FilterMap, LanguageChoice, SentimentChoice, TriState } from './types.js';

export type BooleanFilterField = 'hate' | 'misinformation' | 'bot' | 'verified';

export const DEFAULTS: FilterMap = {
  hate: 'no',
  misinformation: 'no',
  bot: 'no',
  verified: 'no',
  sentiment: 'any',
  language: 'any',
};

export const DEFAULT_PAGE_SIZE = 20;

export const MUTUAL_EXCLUSION_NOTICE =
  'Hate speech and misinformation are mutually exclusive: the other filter was reset to "no".';

export class FilterPanelState {
  hate: TriState = DEFAULTS.hate;
  misinformation: TriState = DEFAULTS.misinformation;
  bot: TriState = DEFAULTS.bot;
  verified: TriState = DEFAULTS.verified;
  sentiment: SentimentChoice = DEFAULTS.sentiment;
  language: LanguageChoice = DEFAULTS.language;
  page = 1;
  pageSize = DEFAULT_PAGE_SIZE;

  /** Selectors changed since the last search. */
  dirty = false;
  /** Inline notice for the auto-reset rule; cleared on the next change. */
  notice: string | null = null;

  setTriState(field: BooleanFilterField, value: TriState): void {
    this.notice = null;
    if (value === 'yes' && field === 'hate' && this.misinformation === 'yes') {
      this.misinformation = 'no';
      this.notice = MUTUAL_EXCLUSION_NOTICE;
    }
    if (value === 'yes' && field === 'misinformation' && this.hate === 'yes') {
      this.hate = 'no';
      this.notice = MUTUAL_EXCLUSION_NOTICE;
    }
    this[field] = value;
    this.dirty = true;
    this.page = 1;
  }

  setSentiment(value: SentimentChoice): void {
    this.notice = null;
    this.sentiment = value;
    this.dirty = true;
    this.page = 1;
  }

  setLanguage(value: LanguageChoice): void {
    this.notice = null;
    this.language = value;
    this.dirty = true;
    this.page = 1;
  }

  setPage(page: number): void {
    this.page = Math.max(1, page);
  }

  markSearched(): void {
    this.dirty = false;
  }

  toFilterMap(): FilterMap {
    return {
      hate: this.hate,
      misinformation: this.misinformation,
      bot: this.bot,
      verified: this.verified,
      sentiment: this.sentiment,
      language: this.language,
    };
  }

  /** Query string with exactly the non-default selections, in a fixed order. */
  toQueryString(): string {
    const params = new URLSearchParams();
    for (const field of ['hate', 'misinformation', 'bot', 'verified'] as const) {
      if (this[field] !== DEFAULTS[field]) params.set(field, this[field]);
    }
    if (this.sentiment !== DEFAULTS.sentiment) params.set('sentiment', this.sentiment);
    if (this.language !== DEFAULTS.language) params.set('language', this.language);
    if (this.page !== 1) params.set('page', String(this.page));
    if (this.pageSize !== DEFAULT_PAGE_SIZE) params.set('page_size', String(this.pageSize));
    return params.toString();
  }
}
