// Wire types mirroring the backend JSON contract.

export type TriState = 'any' | 'yes' | 'no';
export type SentimentChoice = 'any' | 'positive' | 'neutral' | 'negative';
export type LanguageChoice = 'any' | 'en' | 'es';

export interface FilterMap {
  hate: TriState;
  misinformation: TriState;
  bot: TriState;
  verified: TriState;
  sentiment: SentimentChoice;
  language: LanguageChoice;
}

export interface TweetItem {
  id: string;
  text: string;
  source: string;
  category: 'hate_speech' | 'misinformation' | 'normal';
  hate_subtype: 'racism' | 'sexism' | 'none';
  fact_check_url?: string;
  verified: boolean;
  language: string;
  sentiment_compound: number;
  sentiment_label: 'positive' | 'neutral' | 'negative';
  bot_score: number;
  is_bot: boolean;
}

export interface PageResponse {
  items: TweetItem[];
  page: number;
  page_size: number;
  total_matching: number;
  filters: FilterMap;
}

export interface MetaInfo {
  tweet_id: string;
  bot: boolean;
  bot_score: number;
  hate_speech: boolean;
  hate_subtype: string;
  misinformation: boolean;
  fact_check_url?: string;
  verified: boolean;
  sentiment: string;
  sentiment_compound: number;
  category: string;
  language: string;
}

export interface SessionInfo {
  token: string;
  expires_at: string;
}

export interface ClickPayload {
  session_id: string;
  user_id: string;
  target: string;
  tweet_id?: string;
  client_timestamp: string;
  client_seq: number;
}

export interface ClickReceipt {
  receipt_id: string;
}
