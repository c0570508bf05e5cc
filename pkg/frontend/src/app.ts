// DOM shell: login -> filter panel + timeline -> meta dialog.
// All contract logic lives in controller/state/telemetry; this file only
// renders and forwards gestures.

import { ApiClient, ApiError } from './api.js';
import { apiBaseUrl } from './config.js';
import { TimelineController } from './controller.js';
import type { BooleanFilterField } from './state.js';
import { ClickTracker } from './telemetry.js';
import type { LanguageChoice, MetaInfo, SentimentChoice, TriState, TweetItem } from './types.js';

const TRI_OPTIONS: TriState[] = ['no', 'yes', 'any'];
const SENTIMENT_OPTIONS: SentimentChoice[] = ['any', 'positive', 'neutral', 'negative'];
const LANGUAGE_OPTIONS: LanguageChoice[] = ['any', 'en', 'es'];

const root = document.getElementById('app') as HTMLElement;
const api = new ApiClient(apiBaseUrl());

let controller: TimelineController | null = null;
let tracker: ClickTracker | null = null;

// At most one dialog; remember where the user was scrolled to.
let dialogElement: HTMLElement | null = null;
let scrollBeforeDialog = 0;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = '',
  text = '',
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

function select(options: readonly string[], current: string, onChange: (value: string) => void): HTMLSelectElement {
  const node = el('select');
  for (const option of options) {
    const opt = el('option', '', option);
    opt.value = option;
    if (option === current) opt.selected = true;
    node.appendChild(opt);
  }
  node.addEventListener('change', () => onChange(node.value));
  return node;
}

function renderLogin(message = ''): void {
  root.replaceChildren();
  const box = el('div', 'login-box');
  box.appendChild(el('h1', '', 'tweetfilter'));
  box.appendChild(el('p', 'muted', 'Sign in to browse the filtered timeline.'));
  const username = el('input');
  username.placeholder = 'username';
  const password = el('input');
  password.type = 'password';
  password.placeholder = 'password';
  const error = el('p', 'error', message);
  const button = el('button', 'primary', 'Sign in');
  button.addEventListener('click', async () => {
    try {
      await api.signIn(username.value, password.value);
      tracker = new ClickTracker((event) => api.postClick(event), username.value);
      controller = new TimelineController(api, tracker);
      renderMain();
      await controller.search(); // initial load = all defaults
      renderMain();
    } catch (err) {
      error.textContent = err instanceof ApiError ? err.message : 'sign-in failed';
    }
  });
  box.append(username, password, button, error);
  root.appendChild(box);
}

function renderFilterPanel(container: HTMLElement): void {
  if (!controller || !tracker) return;
  const { panel } = controller;
  const form = el('div', 'filter-panel');

  const boolFields: BooleanFilterField[] = ['hate', 'misinformation', 'bot', 'verified'];
  for (const field of boolFields) {
    const row = el('label', 'filter-row', `${field}: `);
    row.appendChild(
      select(TRI_OPTIONS, panel[field], (value) => {
        tracker?.emit(`filter_checkbox:${field}`);
        panel.setTriState(field, value as TriState);
        renderMain();
      }),
    );
    form.appendChild(row);
  }

  const sentimentRow = el('label', 'filter-row', 'sentiment: ');
  sentimentRow.appendChild(
    select(SENTIMENT_OPTIONS, panel.sentiment, (value) => {
      tracker?.emit('filter_checkbox:sentiment');
      panel.setSentiment(value as SentimentChoice);
      renderMain();
    }),
  );
  form.appendChild(sentimentRow);

  const languageRow = el('label', 'filter-row', 'language: ');
  languageRow.appendChild(
    select(LANGUAGE_OPTIONS, panel.language, (value) => {
      tracker?.emit('filter_checkbox:language');
      panel.setLanguage(value as LanguageChoice);
      renderMain();
    }),
  );
  form.appendChild(languageRow);

  const search = el('button', 'primary', panel.dirty ? 'Search *' : 'Search');
  search.addEventListener('click', async () => {
    panel.setPage(1);
    await controller?.search({ userClick: true });
    renderMain();
  });
  form.appendChild(search);

  if (panel.notice) form.appendChild(el('p', 'notice', panel.notice));
  container.appendChild(form);
}

function metaRow(label: string, value: string): HTMLElement {
  const row = el('div', 'meta-row');
  row.appendChild(el('span', 'meta-label', label));
  row.appendChild(el('span', 'meta-value', value));
  return row;
}

function closeDialog(): void {
  if (!dialogElement) return;
  dialogElement.remove();
  dialogElement = null;
  window.scrollTo(0, scrollBeforeDialog);
}

function showMetaDialog(content: MetaInfo | 'not_found'): void {
  closeDialog();
  scrollBeforeDialog = window.scrollY;
  const overlay = el('div', 'dialog-overlay');
  const dialog = el('div', 'dialog');
  dialog.appendChild(el('h2', '', 'Meta-information'));

  if (content === 'not_found') {
    dialog.appendChild(el('p', 'error', 'Tweet not found.'));
  } else {
    dialog.appendChild(metaRow('bot', `${content.bot} (score ${content.bot_score.toFixed(2)})`));
    dialog.appendChild(metaRow('hate speech', `${content.hate_speech} (${content.hate_subtype})`));
    dialog.appendChild(metaRow('misinformation', String(content.misinformation)));
    if (content.misinformation && content.fact_check_url) {
      const link = el('a', 'fact-check', 'fact-checked article');
      link.setAttribute('href', content.fact_check_url);
      link.setAttribute('target', '_blank');
      link.setAttribute('rel', 'noopener noreferrer');
      const row = el('div', 'meta-row');
      row.appendChild(el('span', 'meta-label', 'fact check'));
      row.appendChild(link);
      dialog.appendChild(row);
    }
    dialog.appendChild(metaRow('verified account', String(content.verified)));
    dialog.appendChild(
      metaRow('sentiment', `${content.sentiment} (${content.sentiment_compound.toFixed(4)})`),
    );
    dialog.appendChild(metaRow('category', content.category));
    dialog.appendChild(metaRow('language', content.language));
  }

  const close = el('button', '', 'Close');
  close.addEventListener('click', closeDialog);
  dialog.appendChild(close);
  overlay.appendChild(dialog);
  overlay.addEventListener('click', (event) => {
    if (event.target === overlay) closeDialog();
  });
  dialogElement = overlay;
  document.body.appendChild(overlay);
}

function renderTweet(item: TweetItem): HTMLElement {
  const card = el('article', 'tweet');
  const header = el('header', 'tweet-header');
  header.appendChild(el('span', 'tweet-id', item.id));
  if (item.verified) header.appendChild(el('span', 'badge', 'verified'));
  const metaButton = el('button', 'meta-button', 'meta');
  metaButton.addEventListener('click', async () => {
    const result = await controller?.openMeta(item.id);
    if (result) showMetaDialog(result.status === 'ok' ? result.meta : 'not_found');
  });
  header.appendChild(metaButton);
  card.appendChild(header);
  card.appendChild(el('p', 'tweet-text', item.text));
  return card;
}

function renderTimeline(container: HTMLElement): void {
  if (!controller) return;
  const section = el('section', 'timeline');
  if (controller.error) {
    // Server-side 400s are shown verbatim.
    section.appendChild(el('p', 'error', controller.error));
  } else if (controller.loading) {
    section.appendChild(el('p', 'muted', 'Loading…'));
  } else if (controller.lastPage) {
    const page = controller.lastPage;
    section.appendChild(
      el('p', 'muted', `${page.total_matching} matching tweets — page ${page.page} of ${Math.max(1, controller.totalPages)}`),
    );
    for (const item of page.items) section.appendChild(renderTweet(item));

    const nav = el('div', 'pager');
    const prev = el('button', '', 'Previous');
    prev.disabled = page.page <= 1;
    prev.addEventListener('click', async () => {
      await controller?.previousPage();
      renderMain();
    });
    const next = el('button', '', 'Next');
    next.disabled = page.page >= controller.totalPages;
    next.addEventListener('click', async () => {
      await controller?.nextPage();
      renderMain();
    });
    nav.append(prev, next);
    section.appendChild(nav);
  }
  container.appendChild(section);
}

function renderMain(): void {
  root.replaceChildren();
  const layout = el('div', 'layout');
  const aside = el('aside', 'sidebar');
  aside.appendChild(el('h1', '', 'tweetfilter'));
  renderFilterPanel(aside);
  layout.appendChild(aside);
  const main = el('main', 'content');
  renderTimeline(main);
  layout.appendChild(main);
  root.appendChild(layout);
}

renderLogin();
